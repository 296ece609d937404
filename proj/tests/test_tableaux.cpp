#include <doctest.h>

#include "plethyx/schur.hpp"
#include "plethyx/tableaux.hpp"

using namespace plethyx;

namespace {

Partition P(std::vector<int> parts) {
    return Partition(std::move(parts));
}

} // namespace

TEST_CASE("enumeration examples") {
    auto unique_fill = enumerate_lr_tableaux(SkewShape(P({2, 1}), Partition{}), P({2, 1}));
    REQUIRE(unique_fill.size() == 1);
    CHECK(unique_fill[0].to_string() == "[[1,1],[2]]");
    CHECK(unique_fill[0].content() == P({2, 1}));

    CHECK(enumerate_lr_tableaux(SkewShape(P({3, 2, 1}), P({2, 1})), P({2, 1})).size() == 2);
    CHECK(enumerate_lr_tableaux(SkewShape(P({1, 1}), Partition{}), P({2})).empty());

    // skew printing marks inner boxes with dots
    auto skew = enumerate_lr_tableaux(SkewShape(P({2, 1}), P({1})), P({1, 1}));
    REQUIRE(skew.size() == 1);
    CHECK(skew[0].to_string() == "[[.,1],[2]]");
}

TEST_CASE("enumerated tableaux really are LR tableaux") {
    // semistandard plus lattice condition, re-checked by hand on the word
    for (const LRTableau& t :
         enumerate_lr_tableaux(SkewShape(P({4, 3, 1}), P({2, 1})), P({3, 2}))) {
        const SkewShape& sh = t.shape();
        std::vector<int> word;
        for (int i = 0; i < sh.outer.length(); ++i)
            for (int j = sh.outer.part(i) - 1; j >= sh.inner.part(i); --j)
                word.push_back(t.entry(i, j));
        std::vector<int> seen(8, 0);
        for (int v : word) {
            ++seen[size_t(v)];
            if (v > 1) CHECK(seen[size_t(v)] <= seen[size_t(v) - 1]);
        }
        for (int i = 0; i < sh.outer.length(); ++i)
            for (int j = sh.inner.part(i); j < sh.outer.part(i); ++j) {
                if (j + 1 < sh.outer.part(i)) CHECK(t.entry(i, j) <= t.entry(i, j + 1));
                if (i > 0 && j >= sh.inner.part(i - 1) && j < sh.outer.part(i - 1))
                    CHECK(t.entry(i, j) > t.entry(i - 1, j));
            }
        CHECK(t.content() == P({3, 2}));
    }
}

TEST_CASE("coefficient examples") {
    CHECK(lr_coefficient(P({2, 1}), P({1}), P({1, 1})) == 1);
    CHECK(lr_coefficient(P({3, 2, 1}), P({2, 1}), P({2, 1})) == 2);
    CHECK(lr_coefficient(P({4, 2}), Partition{}, P({4, 2})) == 1);
    CHECK(lr_coefficient(P({2}), P({1, 1}), P({1})) == 0); // containment fails
    CHECK(lr_coefficient(P({3}), P({1}), P({1})) == 0);    // sizes do not add up
}

TEST_CASE("symmetry c^lambda_{mu,nu} = c^lambda_{nu,mu} up to size 8") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            for (int m = 0; m <= n; ++m)
                for (const Partition& mu : enumerate_partitions(m))
                    for (const Partition& nu : enumerate_partitions(n - m))
                        CHECK(lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu));
}

TEST_CASE("transpose symmetry up to size 8") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            for (int m = 0; m <= n; ++m)
                for (const Partition& mu : enumerate_partitions(m))
                    for (const Partition& nu : enumerate_partitions(n - m))
                        CHECK(lr_coefficient(lam, mu, nu) ==
                              lr_coefficient(lam.transposed(), mu.transposed(), nu.transposed()));
}

TEST_CASE("coefficient vanishes without containment") {
    for (int n = 2; n <= 6; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            for (int m = 1; m <= n; ++m)
                for (const Partition& mu : enumerate_partitions(m))
                    if (!lam.contains(mu))
                        for (const Partition& nu : enumerate_partitions(n - m))
                            CHECK(lr_coefficient(lam, mu, nu) == 0);
}

TEST_CASE("product expansion agrees with the power-sum route, |mu|+|nu| <= 6") {
    // the independent cross-check of the LR engine (full size in acceptance)
    for (int a = 0; a <= 6; ++a)
        for (const Partition& mu : enumerate_partitions(a))
            for (int b = 0; a + b <= 6; ++b)
                for (const Partition& nu : enumerate_partitions(b)) {
                    SchurPoly lr = SchurPoly::single(mu) * SchurPoly::single(nu);
                    SchurPoly ps = from_power_sum(to_power_sum(SchurPoly::single(mu))
                                                      .multiplied(to_power_sum(SchurPoly::single(nu))));
                    CHECK(lr == ps);
                }
}
