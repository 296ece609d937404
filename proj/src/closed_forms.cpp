#include "plethyx/closed_forms.hpp"

#include <functional>
#include <stdexcept>

#include "plethyx/errors.hpp"

namespace plethyx {

int plethysm_coeff_hr_closed(const Partition& lambda, const Partition& mu, int r) {
    if (r < 0) throw std::invalid_argument("plethysm_coeff_hr_closed: r must be nonnegative");
    if (lambda.part(0) > r + 1)
        throw scope_error("plethysm_coeff_hr_closed: requires lambda_1 <= r + 1");
    if (r == 0) return mu.length() <= 1 && lambda.empty() ? 1 : 0;
    Partition lt = lambda.transposed();
    if (r % 2 == 0) {
        if (mu.length() > r + 1) return 0;
        for (int i = 1; i <= r + 1; ++i)
            if (lt.part(i - 1) != mu.size() - mu.part(r + 1 - i)) return 0;
        return 1;
    }
    if (mu.part(0) > r + 1) return 0;
    Partition mt = mu.transposed();
    for (int i = 1; i <= r + 1; ++i)
        if (lt.part(i - 1) != mu.size() - mt.part(r + 1 - i)) return 0;
    return 1;
}

int plethysm_coeff_small_r(const Partition& lambda, const Partition& mu, int r) {
    if (r < 0) throw std::invalid_argument("plethysm_coeff_small_r: r must be nonnegative");
    if (lambda.part(0) > 3) throw scope_error("plethysm_coeff_small_r: requires lambda_1 <= 3");
    switch (r) {
    case 0:
        return mu.length() <= 1 && lambda.empty() ? 1 : 0;
    case 1:
        return lambda == mu ? 1 : 0;
    case 2: {
        if (mu.length() > 3) return 0;
        Partition expect =
            Partition({mu.part(0) + mu.part(1), mu.part(0) + mu.part(2), mu.part(1) + mu.part(2)})
                .transposed();
        return lambda == expect ? 1 : 0;
    }
    case 3: {
        if (mu.part(0) > 1) return 0;
        int m = mu.transposed().part(0);
        Partition expect = Partition({m, m, m}).transposed();
        return lambda == expect ? 1 : 0;
    }
    default:
        return mu.empty() && lambda.empty() ? 1 : 0;
    }
}

TruncatedSeries s_hr_perp_closed(const Partition& lambda, int r, int max_degree) {
    if (r < 0) throw std::invalid_argument("s_hr_perp_closed: r must be nonnegative");
    if (lambda.part(0) > r + 1) throw scope_error("s_hr_perp_closed: requires lambda_1 <= r + 1");
    if (r == 0) {
        if (lambda.empty()) return h_series(max_degree);
        return TruncatedSeries(SchurPoly::zero(), max_degree);
    }
    if (lambda.size() % r != 0) return TruncatedSeries(SchurPoly::zero(), max_degree);
    int q = lambda.size() / r;
    Partition lt = lambda.transposed();
    if (q < lt.part(0)) return TruncatedSeries(SchurPoly::zero(), max_degree);
    std::vector<int> alpha(size_t(r) + 1);
    for (int i = 0; i <= r; ++i) alpha[size_t(i)] = q - lt.part(r - i);
    Partition result(std::move(alpha));
    if (r % 2) result = result.transposed();
    return TruncatedSeries(SchurPoly::single(result), max_degree);
}

namespace {

// all multiplicity assignments M over `vectors` with sum M(j) * j = target;
// multiplicities are reported in the order of `vectors`, zeros included
void for_each_assignment(const std::vector<IntVector>& vectors, const IntVector& target,
                         const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> remaining = target;
    std::vector<int> mult(vectors.size(), 0);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == vectors.size()) {
            for (int v : remaining)
                if (v != 0) return;
            visit(mult);
            return;
        }
        const IntVector& j = vectors[idx];
        int tmax = -1; // unbounded until a positive coordinate constrains it
        for (size_t i = 0; i < j.size(); ++i)
            if (j[i] > 0) {
                int bound = remaining[i] / j[i];
                tmax = tmax < 0 ? bound : std::min(tmax, bound);
            }
        if (tmax < 0) tmax = 0; // the zero vector never appears in our candidate sets
        for (int t = 0; t <= tmax; ++t) {
            if (t > 0)
                for (size_t i = 0; i < j.size(); ++i) remaining[i] -= j[i];
            mult[idx] = t;
            rec(idx + 1);
        }
        for (size_t i = 0; i < j.size(); ++i) remaining[i] += tmax * j[i];
        mult[idx] = 0;
    };
    rec(0);
}

// nonzero vectors j <= bound componentwise, in lexicographic order
std::vector<IntVector> boxed_vectors(const IntVector& bound) {
    std::vector<IntVector> out;
    IntVector cur(bound.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == bound.size()) {
            for (int v : cur)
                if (v != 0) {
                    out.push_back(cur);
                    return;
                }
            return;
        }
        for (int v = 0; v <= bound[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    return out;
}

// weak compositions of r with ell parts, lexicographic
std::vector<IntVector> weak_compositions(int ell, int r) {
    std::vector<IntVector> out;
    IntVector cur(size_t(ell), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == ell) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[size_t(i)] = v;
            rec(i + 1, left - v);
        }
        cur[size_t(i)] = 0;
    };
    rec(0, r);
    return out;
}

// 0/1 vectors of length ell and weight r, lexicographic
std::vector<IntVector> binary_vectors(int ell, int r) {
    std::vector<IntVector> out;
    IntVector cur(size_t(ell), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (left > ell - i) return;
        if (i == ell) {
            out.push_back(cur);
            return;
        }
        cur[size_t(i)] = 0;
        rec(i + 1, left);
        if (left > 0) {
            cur[size_t(i)] = 1;
            rec(i + 1, left - 1);
            cur[size_t(i)] = 0;
        }
    };
    rec(0, r);
    return out;
}

int vector_weight(const IntVector& j) {
    int w = 0;
    for (int v : j) w += v;
    return w;
}

SchurPoly he_product(const std::vector<int>& h_idx, const std::vector<int>& e_idx) {
    SchurPoly acc = h_monomial(h_idx);
    for (int m : e_idx) {
        if (m == 0) continue;
        SchurPoly next;
        for (const auto& [mu, c] : acc.terms()) next += pieri_e(m, mu).scaled(c);
        acc = std::move(next);
    }
    return acc;
}

void check_nonnegative(const IntVector& lambda, const char* who) {
    for (int v : lambda)
        if (v < 0) throw std::invalid_argument(std::string(who) + ": negative exponent");
}

} // namespace

HPrefixedSeries frobenius_h_closed(const IntVector& lambda, int max_degree) {
    check_nonnegative(lambda, "frobenius_h_closed");
    std::vector<IntVector> candidates = boxed_vectors(lambda);
    SchurPoly q;
    for_each_assignment(candidates, lambda, [&](const std::vector<int>& mult) {
        std::vector<int> hs;
        for (int t : mult)
            if (t > 0) hs.push_back(t);
        q += h_monomial(hs);
    });
    return HPrefixedSeries(q.truncated(max_degree));
}

HPrefixedSeries frobenius_e_closed(const IntVector& lambda, int max_degree) {
    check_nonnegative(lambda, "frobenius_e_closed");
    IntVector clamp = lambda;
    for (int& v : clamp) v = std::min(v, 1);
    std::vector<IntVector> candidates = boxed_vectors(clamp); // nonzero 0/1 vectors
    SchurPoly q;
    for_each_assignment(candidates, lambda, [&](const std::vector<int>& mult) {
        std::vector<int> hs, es;
        for (size_t i = 0; i < mult.size(); ++i) {
            if (mult[i] == 0) continue;
            (vector_weight(candidates[i]) % 2 == 0 ? hs : es).push_back(mult[i]);
        }
        q += he_product(hs, es);
    });
    return HPrefixedSeries(q.truncated(max_degree));
}

SchurPoly h_hr_perp_closed(const IntVector& lambda, int r) {
    check_nonnegative(lambda, "h_hr_perp_closed");
    if (r < 1)
        throw std::invalid_argument("h_hr_perp_closed: r >= 1 required (use h_h0_perp_closed)");
    std::vector<IntVector> candidates = weak_compositions(int(lambda.size()), r);
    SchurPoly out;
    for_each_assignment(candidates, lambda, [&](const std::vector<int>& mult) {
        std::vector<int> hs;
        for (int t : mult)
            if (t > 0) hs.push_back(t);
        out += h_monomial(hs);
    });
    return out;
}

SchurPoly e_hr_perp_closed(const IntVector& lambda, int r) {
    check_nonnegative(lambda, "e_hr_perp_closed");
    if (r < 1) throw std::invalid_argument("e_hr_perp_closed: r >= 1 required");
    std::vector<IntVector> candidates = binary_vectors(int(lambda.size()), r);
    SchurPoly out;
    for_each_assignment(candidates, lambda, [&](const std::vector<int>& mult) {
        std::vector<int> idx;
        for (int t : mult)
            if (t > 0) idx.push_back(t);
        out += r % 2 == 0 ? h_monomial(idx) : e_monomial(idx);
    });
    return out;
}

HPrefixedSeries h_h0_perp_closed(const IntVector& lambda) {
    check_nonnegative(lambda, "h_h0_perp_closed");
    for (int v : lambda)
        if (v != 0) return HPrefixedSeries(SchurPoly::zero());
    return HPrefixedSeries(SchurPoly::one());
}

SchurPoly e_hr_perp_rect(std::span<const int> lambda, int r) {
    if (r < 1) throw std::invalid_argument("e_hr_perp_rect: r >= 1 required");
    if (int(lambda.size()) != r + 1)
        throw std::invalid_argument("e_hr_perp_rect: lambda must have length r + 1");
    long long total = 0;
    for (int v : lambda) total += v;
    if (total % r != 0) return SchurPoly::zero(); // |lambda|/r outside N: every factor vanishes
    int t = int(total / r);
    std::vector<int> idx(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) idx[i] = t - lambda[i];
    return r % 2 == 0 ? h_monomial(idx) : e_monomial(idx);
}

namespace {

// partitions nu with at most three parts and nu_i <= bound_i
std::vector<Partition> sub_partitions3(const Partition& bound) {
    std::vector<Partition> out;
    for (int n1 = bound.part(0); n1 >= 0; --n1)
        for (int n2 = std::min(n1, bound.part(1)); n2 >= 0; --n2)
            for (int n3 = std::min(n2, bound.part(2)); n3 >= 0; --n3)
                out.push_back(Partition({n1, n2, n3}));
    return out;
}

// visit(r, nu, kappa) for every term of the three-column sum
void for_each_main_term(const Partition& lambda,
                        const std::function<void(int, const Partition&, const Partition&)>& visit) {
    Partition lt = lambda.transposed();
    for (const Partition& nu : sub_partitions3(lt)) {
        int n1 = nu.part(0), n2 = nu.part(1), n3 = nu.part(2);
        for (int r = 0; -n1 + n2 + n3 - r >= 0; ++r) {
            if ((-n1 + n2 + n3 - r) % 2) continue; // the three numerators share parity
            Partition kappa(
                {(n1 + n2 - n3 - r) / 2, (n1 - n2 + n3 - r) / 2, (-n1 + n2 + n3 - r) / 2});
            visit(r, nu, kappa);
        }
    }
}

SchurPoly e_schur(int r) {
    return SchurPoly::single(Partition(std::vector<int>(size_t(r), 1)));
}

} // namespace

HPrefixedSeries frobenius_three_columns(const Partition& lambda, int max_degree) {
    if (lambda.part(0) > 3)
        throw scope_error("frobenius_three_columns: requires lambda_1 <= 3");
    SchurPoly q;
    for_each_main_term(lambda, [&](int r, const Partition& nu, const Partition& kappa) {
        SchurPoly skew = skew_schur(lambda, nu.transposed());
        if (skew.is_zero()) return;
        q += e_schur(r) * SchurPoly::single(kappa) * skew;
    });
    return HPrefixedSeries(q.truncated(max_degree));
}

BigInt restriction_via_main(const Partition& lambda, const Partition& mu) {
    return frobenius_three_columns(lambda, lambda.size()).coefficient(mu);
}

namespace {

// core walk shared by counting and full enumeration; t1c and t2c are the
// tableau counts of the two LR slots
void walk_restriction_tuples(
    const Partition& lambda, const Partition& mu,
    const std::function<void(int, const Partition&, const Partition&, const Partition&,
                             const Partition&, const Partition&, long long, long long)>& visit) {
    if (lambda.part(0) > 3)
        throw scope_error("count_restriction_tuples: requires lambda_1 <= 3");
    for_each_main_term(lambda, [&](int r, const Partition& nu, const Partition& kappa) {
        Partition nut = nu.transposed();
        int rest = lambda.size() - nu.size();
        if (rest + kappa.size() + r > mu.size()) return; // lambda3 could not fit inside mu
        for (const Partition& lam1 : enumerate_partitions(rest)) {
            long long t1c = lr_coefficient(lambda, nut, lam1);
            if (t1c == 0) continue;
            for (const Partition& lam2 : enumerate_partitions(rest + kappa.size())) {
                if (!lam2.contains(lam1) || !mu.contains(lam2)) continue;
                long long t2c = lr_coefficient(lam2, lam1, kappa);
                if (t2c == 0) continue;
                for (const auto& [lam3, one] : pieri_e(r, lam2).terms()) {
                    (void)one;
                    if (!mu.contains(lam3) || !is_horizontal_strip(SkewShape(mu, lam3)))
                        continue;
                    visit(r, nu, lam1, lam2, lam3, kappa, t1c, t2c);
                }
            }
        }
    });
}

} // namespace

long long count_restriction_tuples(const Partition& lambda, const Partition& mu) {
    long long count = 0;
    walk_restriction_tuples(lambda, mu,
                            [&](int, const Partition&, const Partition&, const Partition&,
                                const Partition&, const Partition&, long long t1c,
                                long long t2c) { count += t1c * t2c; });
    return count;
}

std::vector<RestrictionTuple> enumerate_restriction_tuples(const Partition& lambda,
                                                           const Partition& mu) {
    std::vector<RestrictionTuple> out;
    walk_restriction_tuples(
        lambda, mu,
        [&](int r, const Partition& nu, const Partition& lam1, const Partition& lam2,
            const Partition& lam3, const Partition& kappa, long long, long long) {
            auto t1s = enumerate_lr_tableaux(SkewShape(lambda, nu.transposed()), lam1);
            auto t2s = enumerate_lr_tableaux(SkewShape(lam2, lam1), kappa);
            for (const LRTableau& t1 : t1s)
                for (const LRTableau& t2 : t2s)
                    out.push_back(RestrictionTuple{r, nu, lam1, lam2, lam3, t1, t2});
        });
    return out;
}

} // namespace plethyx
