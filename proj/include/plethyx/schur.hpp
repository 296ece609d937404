#ifndef PLETHYX_SCHUR_HPP
#define PLETHYX_SCHUR_HPP

#include <map>
#include <utility>
#include <optional>
#include <span>
#include <string>

#include "plethyx/numeric.hpp"
#include "plethyx/partition.hpp"

namespace plethyx {

/* Element of the ring of symmetric functions in the Schur basis: a finite
 * map from partitions to exact integer coefficients. Zero coefficients are
 * never stored. Term iteration follows the canonical order (degree
 * descending, then lexicographically descending).
 */
class SchurPoly {
public:
    using TermMap = std::map<Partition, BigInt, CanonicalLess>;

    SchurPoly() = default;

    static SchurPoly zero() { return {}; }
    static SchurPoly one() { return single(Partition{}); }
    static SchurPoly single(Partition lambda, BigInt coeff = BigInt(1));

    // the rvalue overload hands out an owned map, so iterating the terms of a
    // temporary (for (auto& [k, v] : f(x).terms())) never dangles
    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    BigInt coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const BigInt& c);

    bool is_zero() const { return terms_.empty(); }
    int max_degree() const; // 0 for the zero polynomial
    // degree when every stored term has the same size; nullopt otherwise
    // (the zero polynomial counts as homogeneous of any degree)
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const;

    SchurPoly homogeneous_component(int d) const;
    SchurPoly truncated(int max_deg) const; // drop terms of degree > max_deg

    SchurPoly operator-() const;
    SchurPoly& operator+=(const SchurPoly& o);
    SchurPoly& operator-=(const SchurPoly& o);
    friend SchurPoly operator+(SchurPoly a, const SchurPoly& b) { return a += b; }
    friend SchurPoly operator-(SchurPoly a, const SchurPoly& b) { return a -= b; }
    SchurPoly operator*(const SchurPoly& o) const; // Littlewood-Richardson product
    SchurPoly scaled(const BigInt& c) const;

    bool operator==(const SchurPoly&) const = default;

private:
    TermMap terms_;
};

// Hall inner product: Schur functions are orthonormal.
BigInt hall_inner(const SchurPoly& f, const SchurPoly& g);

// s_{outer/inner} = sum_nu c^outer_{inner,nu} s_nu
SchurPoly skew_schur(const SkewShape& shape);
// guarded variant: zero when inner is not contained in outer
SchurPoly skew_schur(const Partition& outer, const Partition& inner);

// omega involution, s_lambda -> s_{lambda^T}, extended linearly
SchurPoly omega(const SchurPoly& f);
// antipode: (-1)^d omega on each degree-d component
SchurPoly antipode(const SchurPoly& f);

// Pieri: sum of s_lambda over lambda ⊇ mu with lambda/mu a horizontal
// (resp. vertical) strip of r boxes
SchurPoly pieri_h(int r, const Partition& mu);
SchurPoly pieri_e(int r, const Partition& mu);

/* Products of complete homogeneous / elementary symmetric functions expanded
 * in the Schur basis by iterated Pieri. These two functions are the single
 * choke point for the convention h_m = e_m = 0 for m outside N: any negative
 * index makes the whole product zero. Index order is irrelevant.
 */
SchurPoly h_monomial(std::span<const int> indices);
SchurPoly e_monomial(std::span<const int> indices);

SchurPoly h_to_schur(const IntVector& lambda);
SchurPoly e_to_schur(const IntVector& lambda);

// det(h_{alpha_i - i + j}) / det(e_{alpha_i - i + j}) expanded over
// permutations; equals s_alpha (resp. s_{alpha^T}) for weakly decreasing
// nonnegative alpha, and +-s_mu or 0 in general after straightening
SchurPoly jacobi_trudi_h(std::span<const int> alpha);
SchurPoly jacobi_trudi_e(std::span<const int> alpha);

/* Element of the power-sum basis with exact rational coefficients: finite
 * map partition -> coefficient of p_rho. Plethysm workspace. */
class PowerSumPoly {
public:
    using TermMap = std::map<Partition, Rational, CanonicalLess>;

    PowerSumPoly() = default;
    static PowerSumPoly zero() { return {}; }
    static PowerSumPoly one() { return single(Partition{}); }
    static PowerSumPoly single(Partition rho, Rational coeff = Rational(1));

    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    Rational coeff(const Partition& rho) const;
    void add_term(const Partition& rho, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;

    PowerSumPoly& operator+=(const PowerSumPoly& o);
    friend PowerSumPoly operator+(PowerSumPoly a, const PowerSumPoly& b) { return a += b; }
    // truncate_at < 0 disables truncation
    PowerSumPoly multiplied(const PowerSumPoly& o, int truncate_at = -1) const;
    PowerSumPoly scaled(const Rational& c) const;
    // p_k -> p_{k * stretch} on every factor (plethysm by p_stretch)
    PowerSumPoly stretched(int stretch) const;
    PowerSumPoly truncated(int max_deg) const;

    bool operator==(const PowerSumPoly&) const = default;

private:
    TermMap terms_;
};

PowerSumPoly to_power_sum(const SchurPoly& f);
// exact inverse on its image; throws integrality_error when any Schur
// coefficient comes out non-integral (an upstream bug, not bad input)
SchurPoly from_power_sum(const PowerSumPoly& g);

/* H * factor, an element of the completion: H = 1 + h_1 + h_2 + ... and a
 * finite Schur-basis factor. All the closed-form Frobenius transforms are
 * exactly of this shape, so the object is stored exactly and only expanded
 * at comparison / inner-product time. Equality is factor equality.
 */
class HPrefixedSeries {
public:
    HPrefixedSeries() = default;
    explicit HPrefixedSeries(SchurPoly factor) : factor_(std::move(factor)) {}

    const SchurPoly& factor() const { return factor_; }

    // H * factor with the degrees > max_deg dropped, via iterated pieri_h
    SchurPoly expanded(int max_deg) const;
    // coefficient of s_mu in H * factor
    BigInt coefficient(const Partition& mu) const;

    bool operator==(const HPrefixedSeries&) const = default;

private:
    SchurPoly factor_;
};

} // namespace plethyx

#endif
