#ifndef PLETHYX_CLOSED_FORMS_HPP
#define PLETHYX_CLOSED_FORMS_HPP

#include <span>
#include <vector>

#include "plethyx/plethysm.hpp"
#include "plethyx/schur.hpp"
#include "plethyx/tableaux.hpp"

namespace plethyx {

/* Closed-form evaluators. Each one is proved only on a stated domain; calls
 * outside that domain raise scope_error rather than guessing, and the CLI
 * offers the oracle as an explicit fallback.
 */

/* <s_lambda, s_mu[h_r]> for lambda_1 <= r + 1 (checked): 1 when the
 * transpose-complement conditions hold (even r matches mu, odd r matches
 * mu^T, both zero-padded to length r + 1), else 0. r = 0 follows the
 * one-row/empty rule.
 */
int plethysm_coeff_hr_closed(const Partition& lambda, const Partition& mu, int r);

// the same coefficient for lambda_1 <= 3 (checked) and every r, by the
// five-case rule specialised at r = 0, 1, 2, 3 and r >= 4
int plethysm_coeff_small_r(const Partition& lambda, const Partition& mu, int r);

/* s_lambda[h_r^perp] for lambda_1 <= r + 1 (checked). r = 0 gives H (when
 * lambda is empty) or 0, as a truncated series; r >= 1 gives the single
 * Schur function with index vector |lambda|/r - lambda^T reversed, transposed
 * when r is odd, or 0 when that vector leaves N.
 */
TruncatedSeries s_hr_perp_closed(const Partition& lambda, int r, int max_degree);

/* Frobenius transforms of h_lambda / e_lambda for an exponent vector
 * lambda in N^ell, as H times a finite factor. The factor sums, over all
 * multiplicity assignments M on nonzero index vectors with
 * sum M(j) * j = lambda, the corresponding h/e products. Factor terms of
 * degree > max_degree are pruned.
 */
HPrefixedSeries frobenius_h_closed(const IntVector& lambda, int max_degree);
HPrefixedSeries frobenius_e_closed(const IntVector& lambda, int max_degree);

/* h_lambda[h_r^perp] / e_lambda[h_r^perp] for r >= 1 (checked): sums over
 * multiplicity assignments on the weak compositions WC(ell, r), respectively
 * the 0/1 vectors B(ell, r), of weight r. The e-version uses h factors for
 * even r and e factors for odd r.
 */
SchurPoly h_hr_perp_closed(const IntVector& lambda, int r);
SchurPoly e_hr_perp_closed(const IntVector& lambda, int r);

// r = 0 case of h_lambda[h_r^perp], which lives in the completion:
// H when lambda = 0, zero otherwise
HPrefixedSeries h_h0_perp_closed(const IntVector& lambda);

/* Special case of e_lambda[h_r^perp] for lambda of length exactly r + 1
 * (entries may be negative; the h_m = e_m = 0 convention applies):
 * the single product of h_{|lambda|/r - lambda_i} (r even) or
 * e_{|lambda|/r - lambda_i} (r odd).
 */
SchurPoly e_hr_perp_rect(std::span<const int> lambda, int r);

/* The three-column Frobenius transform: for lambda_1 <= 3 (checked),
 * F(s_lambda) = H * sum over (r, nu) with nu^T contained in lambda and
 * (-nu_1 + nu_2 + nu_3 - r)/2 a nonnegative integer of
 * e_r * s_{(nu_1+nu_2-nu_3-r)/2, (nu_1-nu_2+nu_3-r)/2, (-nu_1+nu_2+nu_3-r)/2}
 * * s_{lambda/nu^T}, all expanded in the Schur basis.
 */
HPrefixedSeries frobenius_three_columns(const Partition& lambda, int max_degree);

// restriction coefficient of s_mu in frobenius_three_columns(lambda)
BigInt restriction_via_main(const Partition& lambda, const Partition& mu);

/* One witness counted by the combinatorial interpretation of r_lambda^mu. */
struct RestrictionTuple {
    int r = 0;
    Partition nu;
    Partition lambda1, lambda2, lambda3;
    LRTableau t1; // shape lambda/nu^T, content lambda1
    LRTableau t2; // shape lambda2/lambda1, content from (nu, r)
};

// number of tuples satisfying the seven conditions; equals r_lambda^mu
long long count_restriction_tuples(const Partition& lambda, const Partition& mu);
std::vector<RestrictionTuple> enumerate_restriction_tuples(const Partition& lambda,
                                                           const Partition& mu);

} // namespace plethyx

#endif
