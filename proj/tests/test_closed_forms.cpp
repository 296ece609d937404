#include <doctest.h>

#include <functional>

#include "plethyx/closed_forms.hpp"
#include "plethyx/errors.hpp"

using namespace plethyx;

namespace {

Partition P(std::vector<int> parts) {
    return Partition(std::move(parts));
}

SchurPoly S(std::vector<int> parts) {
    return SchurPoly::single(P(std::move(parts)));
}

SchurPoly h_r(int r) {
    return S({r});
}

// brute-force adjoint sum_mu <f, s_mu[h_r]> s_mu for homogeneous f
SchurPoly brute_adjoint(const SchurPoly& f, int r) {
    return plethysm_adjoint(f, h_r(r));
}

} // namespace

TEST_CASE("plethysm_coeff_hr_closed examples") {
    CHECK(plethysm_coeff_hr_closed(P({2, 2}), P({2}), 2) == 1);
    CHECK(plethysm_coeff_hr_closed(P({3, 3}), P({1, 1}), 3) == 1);
    CHECK(plethysm_coeff_hr_closed(Partition{}, Partition{}, 5) == 1);
    CHECK(plethysm_coeff_hr_closed(P({3, 1}), P({2}), 2) == 0);
    CHECK_THROWS_AS(plethysm_coeff_hr_closed(P({4}), P({1}), 2), scope_error);
    // r = 0 routes through the one-row rule
    CHECK(plethysm_coeff_hr_closed(Partition{}, P({5}), 0) == 1);
    CHECK(plethysm_coeff_hr_closed(Partition{}, P({2, 1}), 0) == 0);
    CHECK(plethysm_coeff_hr_closed(P({1}), P({5}), 0) == 0);
}

TEST_CASE("plethysm_coeff_small_r examples") {
    CHECK(plethysm_coeff_small_r(P({3, 2, 1}), P({2, 1}), 2) == 1);
    CHECK(plethysm_coeff_small_r(P({2, 2, 1}), P({2, 2, 1}), 1) == 1);
    // Eq (h-three): mu = (1,1) forces lambda = (2,2,2)^T = (3,3)
    CHECK(plethysm_coeff_small_r(P({3, 3}), P({1, 1}), 3) == 1);
    CHECK(plethysm_coeff_small_r(P({2, 2, 2}), P({1, 1}), 3) == 0);
    CHECK(plethysm_coeff_small_r(Partition{}, Partition{}, 7) == 1);
    CHECK(plethysm_coeff_small_r(P({1}), P({1}), 4) == 0);
    CHECK_THROWS_AS(plethysm_coeff_small_r(P({4}), P({1}), 1), scope_error);
}

TEST_CASE("the two closed forms agree on their common domain") {
    for (int r = 0; r <= 5; ++r)
        for (int d = 0; d <= 6; ++d) {
            if (r > 0 && d % r) continue;
            int md = r == 0 ? d : d / r;
            for (const Partition& lam : enumerate_partitions(d, std::min(3, r + 1)))
                for (const Partition& mu : enumerate_partitions(md))
                    CHECK(plethysm_coeff_hr_closed(lam, mu, r) ==
                          plethysm_coeff_small_r(lam, mu, r));
        }
}

TEST_CASE("s_hr_perp_closed examples") {
    CHECK(s_hr_perp_closed(P({3, 1}), 2, 4).value == S({1, 1}));
    CHECK(s_hr_perp_closed(P({2, 2}), 2, 4).value == S({2}));
    CHECK(s_hr_perp_closed(Partition{}, 4, 4).value == SchurPoly::one());
    CHECK(s_hr_perp_closed(P({3}), 2, 4).value.is_zero());
    // r = 0: H for the empty partition, 0 otherwise
    CHECK(s_hr_perp_closed(Partition{}, 0, 3) == h_series(3));
    CHECK(s_hr_perp_closed(P({1}), 0, 3).value.is_zero());
    CHECK_THROWS_AS((void)s_hr_perp_closed(P({4, 1}), 2, 4), scope_error);
}

TEST_CASE("s_hr_perp_closed equals the brute-force adjoint") {
    for (int r = 1; r <= 3; ++r)
        for (int d = 0; d <= 8; ++d)
            for (const Partition& lam : enumerate_partitions(d, r + 1))
                CHECK(s_hr_perp_closed(lam, r, d).value == brute_adjoint(SchurPoly::single(lam), r));
}

TEST_CASE("corollary displayed cases on a small grid (full grid in acceptance)") {
    for (int d = 0; d <= 5; ++d)
        for (const Partition& lam : enumerate_partitions(d, 3)) {
            SchurPoly s = SchurPoly::single(lam);
            Partition lt = lam.transposed();
            // (s-h1-perp)
            CHECK(brute_adjoint(s, 1) == s);
            // (s-h2-perp)
            SchurPoly expect2;
            if ((-lt.part(0) + lt.part(1) + lt.part(2)) % 2 == 0 &&
                -lt.part(0) + lt.part(1) + lt.part(2) >= 0)
                expect2 = SchurPoly::single(P({(lt.part(0) + lt.part(1) - lt.part(2)) / 2,
                                               (lt.part(0) - lt.part(1) + lt.part(2)) / 2,
                                               (-lt.part(0) + lt.part(1) + lt.part(2)) / 2}));
            CHECK(brute_adjoint(s, 2) == expect2);
            // (s-h3-perp)
            SchurPoly expect3;
            if (lt.part(0) == lt.part(1) && lt.part(1) == lt.part(2))
                expect3 = e_to_schur({lt.part(0)});
            CHECK(brute_adjoint(s, 3) == expect3);
            // (s-hr-perp) for r = 4, 5
            for (int r = 4; r <= 5; ++r)
                CHECK(brute_adjoint(s, r) ==
                      (lam.empty() ? SchurPoly::one() : SchurPoly::zero()));
        }
}

TEST_CASE("frobenius_h_closed examples") {
    CHECK(frobenius_h_closed({2}, 2) == HPrefixedSeries(h_to_schur({1}) + h_to_schur({2})));
    CHECK(frobenius_h_closed({3}, 3) ==
          HPrefixedSeries(h_to_schur({1}) + h_to_schur({1, 1}) + h_to_schur({3})));
    CHECK(frobenius_h_closed({}, 5) == HPrefixedSeries(SchurPoly::one()));
    CHECK(frobenius_h_closed({0, 0}, 5) == HPrefixedSeries(SchurPoly::one()));
}

TEST_CASE("frobenius_e_closed examples") {
    CHECK(frobenius_e_closed({2}, 2) == HPrefixedSeries(e_to_schur({2})));
    CHECK(frobenius_e_closed({1, 1}, 2) ==
          HPrefixedSeries(h_to_schur({1}) + e_to_schur({1, 1})));
    CHECK(frobenius_e_closed({0, 0}, 4) == HPrefixedSeries(SchurPoly::one()));
}

TEST_CASE("closed Frobenius transforms match the oracle on a small grid") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 4; ++b) {
            IntVector lam = {a, b};
            int depth = a + b + 2;
            CHECK(frobenius_h_closed(lam, depth).expanded(depth) ==
                  frobenius_oracle(h_to_schur(lam), depth).value);
            CHECK(frobenius_e_closed(lam, depth).expanded(depth) ==
                  frobenius_oracle(e_to_schur(lam), depth).value);
        }
}

TEST_CASE("h_hr_perp_closed examples") {
    CHECK(h_hr_perp_closed({2, 2}, 2) == h_to_schur({2}) + h_to_schur({1, 1}));
    CHECK(h_hr_perp_closed({0, 0, 0}, 2) == SchurPoly::one());
    CHECK(h_hr_perp_closed({1}, 1) == h_to_schur({1}));
    CHECK_THROWS_AS((void)h_hr_perp_closed({1}, 0), std::invalid_argument);
}

TEST_CASE("e_hr_perp_closed examples") {
    CHECK(e_hr_perp_closed({2, 1, 1}, 2) == h_to_schur({1, 1}));
    CHECK(e_hr_perp_closed({1, 1}, 1) == e_to_schur({1, 1}));
    CHECK(e_hr_perp_closed({0, 0}, 3) == SchurPoly::one());
}

TEST_CASE("h_h0_perp_closed is H on the zero vector and zero otherwise") {
    CHECK(h_h0_perp_closed({0, 0}) == HPrefixedSeries(SchurPoly::one()));
    CHECK(h_h0_perp_closed({}) == HPrefixedSeries(SchurPoly::one()));
    CHECK(h_h0_perp_closed({1, 0}) == HPrefixedSeries(SchurPoly::zero()));
    // against the adjoint definition: <h_lambda, s_mu[1]> = [lambda = 0][one-row mu]
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            SchurPoly f = h_to_schur({a, b});
            SchurPoly expanded = h_h0_perp_closed({a, b}).expanded(3);
            for (int n = 0; n <= 3; ++n)
                for (const Partition& mu : enumerate_partitions(n)) {
                    BigInt want = hall_inner(f, plethysm(SchurPoly::single(mu), SchurPoly::one()));
                    CHECK(expanded.coeff(mu) == want);
                }
        }
}

TEST_CASE("e_hr_perp_rect examples and the zero conventions") {
    std::vector<int> v211 = {2, 1, 1};
    CHECK(e_hr_perp_rect(v211, 2) == S({2}) + S({1, 1})); // h_0 h_1 h_1
    std::vector<int> v1110 = {1, 1, 1, 0};
    CHECK(e_hr_perp_rect(v1110, 3) == S({1})); // e_0 e_0 e_0 e_1
    std::vector<int> v200 = {2, 0, 0};
    CHECK(e_hr_perp_rect(v200, 2).is_zero()); // h_{-1} kills the product
    std::vector<int> neg = {3, -1, 0};
    CHECK(e_hr_perp_rect(neg, 2).is_zero());
    std::vector<int> odd_total = {1, 0, 0};
    CHECK(e_hr_perp_rect(odd_total, 2).is_zero()); // |lambda|/r not an integer
    CHECK_THROWS_AS((void)e_hr_perp_rect(v211, 1), std::invalid_argument);
}

TEST_CASE("rect special case agrees with the general closed form (small grid)") {
    for (int r = 1; r <= 3; ++r)
        for (int total = 0; total <= 6; ++total) {
            // vectors of length r+1 summing to total
            std::vector<IntVector> vecs;
            IntVector cur(size_t(r) + 1, 0);
            std::function<void(int, int)> rec = [&](int i, int left) {
                if (i == r + 1) {
                    if (left == 0) vecs.push_back(cur);
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    cur[size_t(i)] = v;
                    rec(i + 1, left - v);
                }
                cur[size_t(i)] = 0;
            };
            rec(0, total);
            for (const IntVector& lam : vecs)
                CHECK(e_hr_perp_rect(lam, r) == e_hr_perp_closed(lam, r));
        }
}

TEST_CASE("he_hr_perp closed forms match brute force on a small grid") {
    for (int r = 1; r <= 2; ++r)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) {
                IntVector lam = {a, b};
                CHECK(h_hr_perp_closed(lam, r) == brute_adjoint(h_to_schur(lam), r));
                CHECK(e_hr_perp_closed(lam, r) == brute_adjoint(e_to_schur(lam), r));
            }
}

TEST_CASE("frobenius_three_columns examples") {
    CHECK(frobenius_three_columns(P({1, 1}), 6) == HPrefixedSeries(S({1, 1})));
    CHECK(frobenius_three_columns(P({1}), 6) == HPrefixedSeries(S({1})));
    CHECK(frobenius_three_columns(P({3}), 6) ==
          HPrefixedSeries(S({3}) + S({2}) + S({1, 1}) + S({1})));
    CHECK(frobenius_three_columns(P({1, 1}), 6) == frobenius_e_closed({2}, 6));
    CHECK_THROWS_AS((void)frobenius_three_columns(P({4}), 4), scope_error);
}

TEST_CASE("restriction_via_main examples") {
    CHECK(restriction_via_main(P({1, 1}), P({2, 1})) == BigInt(1));
    CHECK(restriction_via_main(P({1, 1, 1}), P({2, 1, 1})) == BigInt(1));
    CHECK(restriction_via_main(P({1, 1}), P({3})) == BigInt(0));
    CHECK_THROWS_AS((void)restriction_via_main(P({4}), P({4})), scope_error);
}

TEST_CASE("restriction tuple counting examples") {
    CHECK(count_restriction_tuples(P({1, 1}), P({2, 1})) == 1);
    CHECK(count_restriction_tuples(P({1, 1}), P({2})) == 0);
    CHECK(count_restriction_tuples(Partition{}, P({3})) == 1);

    auto tuples = enumerate_restriction_tuples(P({1, 1}), P({2, 1}));
    REQUIRE(tuples.size() == 1);
    CHECK(tuples[0].r == 0);
    CHECK(tuples[0].nu == Partition{});
    CHECK(tuples[0].lambda1 == P({1, 1}));
    CHECK(tuples[0].lambda2 == P({1, 1}));
    CHECK(tuples[0].lambda3 == P({1, 1}));
    CHECK(tuples[0].t1.to_string() == "[[1],[2]]");
}

TEST_CASE("enumerated tuples satisfy all seven conditions literally") {
    std::vector<std::pair<Partition, Partition>> cases = {
        {P({2, 1}), P({4, 2})}, {P({3, 2}), P({3, 2, 1})}, {P({2, 2, 1}), P({4, 1})},
        {P({1, 1, 1}), P({2, 1})}, {P({3}), P({2, 2})}};
    for (const auto& [lam, mu] : cases)
        for (const RestrictionTuple& t : enumerate_restriction_tuples(lam, mu)) {
            CHECK(t.r >= 0);
            int n1 = t.nu.part(0), n2 = t.nu.part(1), n3 = t.nu.part(2);
            CHECK((-n1 + n2 + n3 - t.r) >= 0);
            CHECK((-n1 + n2 + n3 - t.r) % 2 == 0);
            // T1: shape lambda/nu^T, content lambda1
            CHECK(t.t1.shape() == SkewShape(lam, t.nu.transposed()));
            CHECK(t.t1.content() == t.lambda1);
            // T2: shape lambda2/lambda1, content from (nu, r)
            Partition kappa({(n1 + n2 - n3 - t.r) / 2, (n1 - n2 + n3 - t.r) / 2,
                             (-n1 + n2 + n3 - t.r) / 2});
            CHECK(t.t2.shape() == SkewShape(t.lambda2, t.lambda1));
            CHECK(t.t2.content() == kappa);
            // lambda3/lambda2 is a vertical strip with r boxes
            CHECK(t.lambda3.contains(t.lambda2));
            CHECK(t.lambda3.size() - t.lambda2.size() == t.r);
            CHECK(is_vertical_strip(SkewShape(t.lambda3, t.lambda2)));
            // mu/lambda3 is a horizontal strip
            CHECK(mu.contains(t.lambda3));
            CHECK(is_horizontal_strip(SkewShape(mu, t.lambda3)));
        }
    // and the cases exercise nonempty tuple sets
    CHECK(!enumerate_restriction_tuples(P({2, 1}), P({4, 2})).empty());
}

TEST_CASE("tuple enumeration count equals the product count") {
    for (int dl = 0; dl <= 5; ++dl)
        for (const Partition& lam : enumerate_partitions(dl, 3))
            for (int dm = 0; dm <= 5; ++dm)
                for (const Partition& mu : enumerate_partitions(dm))
                    CHECK(long(enumerate_restriction_tuples(lam, mu).size()) ==
                          count_restriction_tuples(lam, mu));
}

TEST_CASE("triple agreement on a small grid (full grid in acceptance)") {
    for (int dl = 0; dl <= 5; ++dl)
        for (const Partition& lam : enumerate_partitions(dl, 3))
            for (int dm = 0; dm <= 5; ++dm)
                for (const Partition& mu : enumerate_partitions(dm)) {
                    BigInt main = restriction_via_main(lam, mu);
                    BigInt tuples(count_restriction_tuples(lam, mu));
                    BigInt oracle = restriction_oracle(lam, mu);
                    CHECK(main == tuples);
                    CHECK(main == oracle);
                }
}
