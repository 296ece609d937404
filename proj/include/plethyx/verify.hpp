#ifndef PLETHYX_VERIFY_HPP
#define PLETHYX_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "plethyx/closed_forms.hpp"
#include "plethyx/plethysm.hpp"
#include "plethyx/schur.hpp"

namespace plethyx {

struct Mismatch {
    std::string input;
    std::string closed;
    std::string oracle;
    bool operator==(const Mismatch&) const = default;
};

/* Result of a differential sweep. A sweep passed exactly when `mismatches`
 * is empty; mismatches are data, not errors. Reports are deterministic up to
 * elapsed_ms across runs and parallelism levels.
 */
struct SweepReport {
    std::string suite;
    long long checked = 0;
    std::vector<Mismatch> mismatches;
    long long elapsed_ms = 0;
    std::map<std::string, long long> config;

    bool passed() const { return mismatches.empty(); }
    // elapsed_ms intentionally excluded
    bool same_outcome(const SweepReport& o) const {
        return suite == o.suite && checked == o.checked && mismatches == o.mismatches &&
               config == o.config;
    }
};

// PLETHYX_CAP when set to a positive integer, else 10; bounds the
// deg(f) * deg(g) product the monomial oracle accepts
int monomial_cap();

/* Plethysm computed with no power-sum machinery at all: expand g into its
 * monomial list in deg(f)*deg(g) variables (enough variables to be
 * faithful), substitute the monomials into f via semistandard tableaux, and
 * re-expand the resulting symmetric polynomial in the Schur basis by
 * leading-term subtraction. The independent second route for the dual-path
 * plethysm check. cap < 0 reads the environment cap.
 */
SchurPoly monomial_substitution_plethysm(const SchurPoly& f, const SchurPoly& g, int cap = -1);

// <s_lambda, s_mu[h_r]> closed form vs. brute force over the full grid
// r in [1, r_max], d <= max_size with r | d, lambda |- d with lambda_1 <= r+1,
// mu |- d/r
SweepReport sweep_plethysm_hr(int max_size, int r_max, int parallelism = 1);

// triple agreement restriction_via_main = count_restriction_tuples =
// restriction_oracle over lambda_1 <= 3, |lambda| <= max_lambda, |mu| <= max_mu
SweepReport sweep_restriction(int max_lambda, int max_mu, int parallelism = 1);

// h_lambda[h_r^perp] and e_lambda[h_r^perp] closed forms vs. brute-force
// adjoints (ell <= ell_max, 1 <= r <= r_max, |lambda| <= max_size), plus the
// rectangular special case against the general formula on length r + 1
SweepReport sweep_he_h_perp(int max_size, int ell_max, int r_max, int parallelism = 1);

// frobenius_h_closed / frobenius_e_closed vs. frobenius_oracle, expanded to
// degree |lambda| + 3, for ell <= ell_max, |lambda| <= max_size
SweepReport sweep_f_he(int max_size, int ell_max, int parallelism = 1);

// ring integrity: Jacobi-Trudi straightening, Schur <-> power-sum round
// trips, LR vs power-sum multiplication, omega / antipode identities
SweepReport sweep_ring(int max_size, int parallelism = 1);

} // namespace plethyx

#endif
