#ifndef PLETHYX_PLETHYSM_HPP
#define PLETHYX_PLETHYSM_HPP

#include "plethyx/schur.hpp"

namespace plethyx {

/* The truncation to degree <= max_degree of an element of the completion.
 * Truncation is the library's realization of the limit convention: every
 * series in scope (H and Frobenius transforms) has nonnegative degrees only,
 * so truncated arithmetic is exact in all degrees <= max_degree.
 */
struct TruncatedSeries {
    SchurPoly value;
    int max_degree = 0;

    TruncatedSeries() = default;
    TruncatedSeries(SchurPoly v, int max_deg) : value(v.truncated(max_deg)), max_degree(max_deg) {}

    bool operator==(const TruncatedSeries&) const = default;
};

// 1 + h_1 + ... + h_max_degree, the truncation of H
TruncatedSeries h_series(int max_degree);

/* f[g], computed in the power-sum basis: p_k[g] multiplies every power-sum
 * index of g by k, extended over the expansion of f as a ring homomorphism
 * in each p_k. g may be inhomogeneous. The result is converted back to the
 * Schur basis with integrality enforced.
 */
SchurPoly plethysm(const SchurPoly& f, const SchurPoly& g);

// same computation against a truncated series, truncating throughout;
// correct in all degrees <= g.max_degree
TruncatedSeries plethysm_truncated(const SchurPoly& f, const TruncatedSeries& g);

/* f[g^perp] = sum_mu <f, s_mu[g]> s_mu for homogeneous f and homogeneous g of
 * degree k >= 1; zero unless k divides deg f. Throws scope_error when the
 * degree preconditions fail.
 */
SchurPoly plethysm_adjoint(const SchurPoly& f, const SchurPoly& g);

/* Brute-force Frobenius transform of homogeneous f: the series
 * sum_{|mu| <= max_degree} <f, s_mu[H]> s_mu with every coefficient computed
 * from a truncated plethysm against H. Ground truth for the closed forms.
 */
TruncatedSeries frobenius_oracle(const SchurPoly& f, int max_degree);

// Littlewood's identity r_lambda^mu = <s_lambda, s_mu[H]>, evaluated with H
// truncated at |lambda|; valid for every lambda
BigInt restriction_oracle(const Partition& lambda, const Partition& mu);

} // namespace plethyx

#endif
