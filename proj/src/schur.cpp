#include "plethyx/schur.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "plethyx/errors.hpp"
#include "plethyx/tableaux.hpp"

namespace plethyx {

SchurPoly SchurPoly::single(Partition lambda, BigInt coeff) {
    SchurPoly p;
    p.add_term(lambda, coeff);
    return p;
}

BigInt SchurPoly::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SchurPoly::add_term(const Partition& lambda, const BigInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int SchurPoly::max_degree() const {
    // canonical order puts the largest degree first
    return terms_.empty() ? 0 : terms_.begin()->first.size();
}

std::optional<int> SchurPoly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.size();
    if (std::prev(terms_.end())->first.size() != d) return std::nullopt;
    return d;
}

bool SchurPoly::is_homogeneous() const {
    return homogeneous_degree().has_value();
}

SchurPoly SchurPoly::homogeneous_component(int d) const {
    SchurPoly out;
    for (const auto& [lam, c] : terms_)
        if (lam.size() == d) out.terms_.emplace(lam, c);
    return out;
}

SchurPoly SchurPoly::truncated(int max_deg) const {
    SchurPoly out;
    for (const auto& [lam, c] : terms_)
        if (lam.size() <= max_deg) out.terms_.emplace(lam, c);
    return out;
}

SchurPoly SchurPoly::operator-() const {
    SchurPoly out;
    for (const auto& [lam, c] : terms_) out.terms_.emplace(lam, -c);
    return out;
}

SchurPoly& SchurPoly::operator+=(const SchurPoly& o) {
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
}

SchurPoly& SchurPoly::operator-=(const SchurPoly& o) {
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
}

SchurPoly SchurPoly::scaled(const BigInt& c) const {
    SchurPoly out;
    if (c.is_zero()) return out;
    for (const auto& [lam, a] : terms_) out.terms_.emplace(lam, a * c);
    return out;
}

SchurPoly SchurPoly::operator*(const SchurPoly& o) const {
    SchurPoly out;
    for (const auto& [mu0, a] : terms_)
        for (const auto& [nu0, b] : o.terms_) {
            // fill the smaller content: LR enumeration cost follows |nu|
            const Partition& mu = mu0.size() >= nu0.size() ? mu0 : nu0;
            const Partition& nu = mu0.size() >= nu0.size() ? nu0 : mu0;
            BigInt ab = a * b;
            if (nu.empty()) {
                out.add_term(mu, ab);
                continue;
            }
            int n = mu.size() + nu.size();
            for (const Partition& lam :
                 enumerate_partitions(n, mu.part(0) + nu.part(0), mu.length() + nu.length())) {
                if (!lam.contains(mu) || !lam.contains(nu)) continue;
                long long c = lr_coefficient(lam, mu, nu);
                if (c) out.add_term(lam, ab * BigInt(c));
            }
        }
    return out;
}

BigInt hall_inner(const SchurPoly& f, const SchurPoly& g) {
    const SchurPoly& small = f.terms().size() <= g.terms().size() ? f : g;
    const SchurPoly& large = f.terms().size() <= g.terms().size() ? g : f;
    BigInt out = 0;
    for (const auto& [lam, c] : small.terms()) {
        BigInt d = large.coeff(lam);
        if (!d.is_zero()) out += c * d;
    }
    return out;
}

SchurPoly skew_schur(const SkewShape& shape) {
    SchurPoly out;
    for (const Partition& nu : enumerate_partitions(shape.box_count())) {
        long long c = lr_coefficient(shape.outer, shape.inner, nu);
        if (c) out.add_term(nu, BigInt(c));
    }
    return out;
}

SchurPoly skew_schur(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return SchurPoly::zero();
    return skew_schur(SkewShape(outer, inner));
}

SchurPoly omega(const SchurPoly& f) {
    SchurPoly out;
    for (const auto& [lam, c] : f.terms()) out.add_term(lam.transposed(), c);
    return out;
}

SchurPoly antipode(const SchurPoly& f) {
    SchurPoly out;
    for (const auto& [lam, c] : f.terms())
        out.add_term(lam.transposed(), lam.size() % 2 ? -c : c);
    return out;
}

SchurPoly pieri_h(int r, const Partition& mu) {
    if (r < 0) throw std::invalid_argument("pieri_h: r must be nonnegative");
    SchurPoly out;
    int len = mu.length();
    std::vector<int> lam(size_t(len) + 1, 0);
    std::function<void(int, int)> rec = [&](int row, int budget) {
        if (row == len + 1) {
            if (budget == 0) out.add_term(Partition(lam), 1);
            return;
        }
        int lo = mu.part(row);
        int hi = row == 0 ? lo + budget : std::min(mu.part(row - 1), lo + budget);
        for (int v = lo; v <= hi; ++v) {
            lam[size_t(row)] = v;
            rec(row + 1, budget - (v - lo));
        }
        lam[size_t(row)] = 0;
    };
    rec(0, r);
    return out;
}

SchurPoly pieri_e(int r, const Partition& mu) {
    if (r < 0) throw std::invalid_argument("pieri_e: r must be nonnegative");
    SchurPoly out;
    int len = mu.length();
    std::vector<int> lam(size_t(len + r), 0);
    std::function<void(int, int, int)> rec = [&](int row, int budget, int prev) {
        if (row == len + r) {
            if (budget == 0) out.add_term(Partition(lam), 1);
            return;
        }
        int base = mu.part(row);
        if (base == 0 && budget == 0) {
            out.add_term(Partition(std::vector<int>(lam.begin(), lam.begin() + row)), 1);
            return;
        }
        lam[size_t(row)] = base;
        rec(row + 1, budget, base);
        if (budget > 0 && base + 1 <= prev) {
            lam[size_t(row)] = base + 1;
            rec(row + 1, budget - 1, base + 1);
        }
        lam[size_t(row)] = 0;
    };
    if (r == 0) return SchurPoly::single(mu);
    rec(0, r, mu.part(0) + 1);
    return out;
}

namespace {

SchurPoly strip_product(std::span<const int> indices, SchurPoly (*pieri)(int, const Partition&)) {
    for (int m : indices)
        if (m < 0) return SchurPoly::zero(); // h_m = e_m = 0 for m outside N
    SchurPoly acc = SchurPoly::one();
    for (int m : indices) {
        if (m == 0) continue;
        SchurPoly next;
        for (const auto& [mu, c] : acc.terms()) next += pieri(m, mu).scaled(c);
        acc = std::move(next);
    }
    return acc;
}

} // namespace

SchurPoly h_monomial(std::span<const int> indices) {
    return strip_product(indices, &pieri_h);
}

SchurPoly e_monomial(std::span<const int> indices) {
    return strip_product(indices, &pieri_e);
}

SchurPoly h_to_schur(const IntVector& lambda) {
    for (int m : lambda)
        if (m < 0) throw std::invalid_argument("h_to_schur: negative exponent");
    return h_monomial(lambda);
}

SchurPoly e_to_schur(const IntVector& lambda) {
    for (int m : lambda)
        if (m < 0) throw std::invalid_argument("e_to_schur: negative exponent");
    return e_monomial(lambda);
}

namespace {

SchurPoly jacobi_trudi(std::span<const int> alpha, SchurPoly (*monomial)(std::span<const int>)) {
    int n = int(alpha.size());
    if (n == 0) return SchurPoly::one();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
    // collect signed multiplicities of the distinct index multisets first,
    // then expand each surviving multiset once
    std::map<std::vector<int>, long long> monomials;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[size_t(i)] > perm[size_t(j)]) ++inversions;
        std::vector<int> indices;
        indices.reserve(size_t(n));
        bool dead = false;
        for (int i = 0; i < n && !dead; ++i) {
            int m = alpha[size_t(i)] - (i + 1) + (perm[size_t(i)] + 1);
            if (m < 0) dead = true;
            else if (m > 0) indices.push_back(m);
        }
        if (!dead) {
            std::sort(indices.begin(), indices.end(), std::greater<>());
            monomials[indices] += inversions % 2 ? -1 : 1;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    SchurPoly out;
    for (const auto& [indices, mult] : monomials)
        if (mult) out += monomial(indices).scaled(BigInt(mult));
    return out;
}

} // namespace

SchurPoly jacobi_trudi_h(std::span<const int> alpha) {
    return jacobi_trudi(alpha, &h_monomial);
}

SchurPoly jacobi_trudi_e(std::span<const int> alpha) {
    return jacobi_trudi(alpha, &e_monomial);
}

/* ---- power sums and Murnaghan-Nakayama --------------------------------- */

PowerSumPoly PowerSumPoly::single(Partition rho, Rational coeff) {
    PowerSumPoly p;
    p.add_term(rho, coeff);
    return p;
}

Rational PowerSumPoly::coeff(const Partition& rho) const {
    auto it = terms_.find(rho);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PowerSumPoly::add_term(const Partition& rho, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(rho, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int PowerSumPoly::max_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.size();
}

PowerSumPoly& PowerSumPoly::operator+=(const PowerSumPoly& o) {
    for (const auto& [rho, c] : o.terms_) add_term(rho, c);
    return *this;
}

PowerSumPoly PowerSumPoly::multiplied(const PowerSumPoly& o, int truncate_at) const {
    PowerSumPoly out;
    for (const auto& [rho, a] : terms_)
        for (const auto& [sigma, b] : o.terms_) {
            if (truncate_at >= 0 && rho.size() + sigma.size() > truncate_at) continue;
            std::vector<int> parts = rho.parts();
            parts.insert(parts.end(), sigma.parts().begin(), sigma.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<>());
            out.add_term(Partition(std::move(parts)), a * b);
        }
    return out;
}

PowerSumPoly PowerSumPoly::scaled(const Rational& c) const {
    PowerSumPoly out;
    if (c.is_zero()) return out;
    for (const auto& [rho, a] : terms_) out.terms_.emplace(rho, a * c);
    return out;
}

PowerSumPoly PowerSumPoly::stretched(int stretch) const {
    PowerSumPoly out;
    for (const auto& [rho, a] : terms_) {
        std::vector<int> parts = rho.parts();
        for (int& p : parts) p *= stretch;
        out.terms_.emplace(Partition(std::move(parts)), a);
    }
    return out;
}

PowerSumPoly PowerSumPoly::truncated(int max_deg) const {
    PowerSumPoly out;
    for (const auto& [rho, a] : terms_)
        if (rho.size() <= max_deg) out.terms_.emplace(rho, a);
    return out;
}

namespace {

/* Border strips via first-column hook lengths: with beta-numbers
 * b_j = lambda_j + (len - 1 - j), adding (removing) a border strip of size r
 * moves one b_j up (down) by r onto a value not already present, and the
 * strip height is the number of beta-numbers strictly between the old and
 * new value.
 */
std::vector<std::pair<Partition, int>> add_border_strips(const Partition& mu, int r) {
    int len = mu.length() + r;
    std::vector<int> beta(static_cast<size_t>(len));
    for (int j = 0; j < len; ++j) beta[size_t(j)] = mu.part(j) + (len - 1 - j);
    std::vector<std::pair<Partition, int>> out;
    for (int j = 0; j < len; ++j) {
        int target = beta[size_t(j)] + r;
        bool collision = false;
        int between = 0;
        for (int k = 0; k < len; ++k) {
            if (k == j) continue;
            if (beta[size_t(k)] == target) collision = true;
            if (beta[size_t(k)] > beta[size_t(j)] && beta[size_t(k)] < target) ++between;
        }
        if (collision) continue;
        std::vector<int> moved = beta;
        moved[size_t(j)] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i) parts[size_t(i)] = moved[size_t(i)] - (len - 1 - i);
        out.emplace_back(Partition(std::move(parts)), between % 2 ? -1 : 1);
    }
    return out;
}

std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& lambda, int r) {
    int len = lambda.length();
    std::vector<int> beta(static_cast<size_t>(len));
    for (int j = 0; j < len; ++j) beta[size_t(j)] = lambda.part(j) + (len - 1 - j);
    std::vector<std::pair<Partition, int>> out;
    for (int j = 0; j < len; ++j) {
        int target = beta[size_t(j)] - r;
        if (target < 0) continue;
        bool collision = false;
        int between = 0;
        for (int k = 0; k < len; ++k) {
            if (k == j) continue;
            if (beta[size_t(k)] == target) collision = true;
            if (beta[size_t(k)] > target && beta[size_t(k)] < beta[size_t(j)]) ++between;
        }
        if (collision) continue;
        std::vector<int> moved = beta;
        moved[size_t(j)] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i) parts[size_t(i)] = moved[size_t(i)] - (len - 1 - i);
        out.emplace_back(Partition(std::move(parts)), between % 2 ? -1 : 1);
    }
    return out;
}

// chi^lambda(rho) by ribbon recursion, removing the parts of rho in order
long long character(const Partition& lambda, const std::vector<int>& rho, size_t from) {
    if (from == rho.size()) return lambda.empty() ? 1 : 0;
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    static thread_local std::map<Key, long long> memo;
    Key key{lambda.parts(), std::vector<int>(rho.begin() + long(from), rho.end())};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long sum = 0;
    for (const auto& [mu, sign] : remove_border_strips(lambda, rho[from]))
        sum += sign * character(mu, rho, from + 1);
    memo.emplace(std::move(key), sum);
    return sum;
}

long long z_of(const Partition& rho) {
    long long z = 1;
    int i = 0;
    while (i < rho.length()) {
        int part = rho.part(i);
        int mult = 0;
        while (i < rho.length() && rho.part(i) == part) {
            ++mult;
            ++i;
        }
        for (int k = 0; k < mult; ++k) z *= part;
        for (int k = 2; k <= mult; ++k) z *= k;
    }
    return z;
}

} // namespace

PowerSumPoly to_power_sum(const SchurPoly& f) {
    PowerSumPoly out;
    for (const auto& [lam, c] : f.terms()) {
        for (const Partition& rho : enumerate_partitions(lam.size())) {
            long long chi = character(lam, rho.parts(), 0);
            if (chi)
                out.add_term(rho, Rational(BigInt(chi) * c, BigInt(z_of(rho))));
        }
    }
    return out;
}

SchurPoly from_power_sum(const PowerSumPoly& g) {
    std::map<Partition, Rational, CanonicalLess> acc;
    for (const auto& [rho, c] : g.terms()) {
        // p_rho in the Schur basis by iterated border-strip addition
        SchurPoly x = SchurPoly::one();
        for (int r : rho.parts()) {
            SchurPoly next;
            for (const auto& [mu, a] : x.terms())
                for (const auto& [lam, sign] : add_border_strips(mu, r))
                    next.add_term(lam, sign > 0 ? a : -a);
            x = std::move(next);
        }
        for (const auto& [lam, a] : x.terms()) {
            Rational& slot = acc[lam];
            slot += c * Rational(a);
        }
    }
    SchurPoly out;
    for (const auto& [lam, q] : acc) {
        if (q.is_zero()) continue;
        if (!q.is_integer())
            throw integrality_error("from_power_sum: non-integral coefficient " + q.to_string() +
                                    " at s[" + lam.to_string() + "]");
        out.add_term(lam, q.num());
    }
    return out;
}

/* ---- H-prefixed series -------------------------------------------------- */

SchurPoly HPrefixedSeries::expanded(int max_deg) const {
    SchurPoly out;
    for (const auto& [tau, c] : factor_.terms())
        for (int m = 0; m + tau.size() <= max_deg; ++m)
            out += pieri_h(m, tau).scaled(c);
    return out;
}

BigInt HPrefixedSeries::coefficient(const Partition& mu) const {
    // <H s_tau, s_mu> = 1 exactly when mu/tau is a horizontal strip
    BigInt out = 0;
    for (const auto& [tau, c] : factor_.terms())
        if (mu.contains(tau) && is_horizontal_strip(SkewShape(mu, tau))) out += c;
    return out;
}

} // namespace plethyx
