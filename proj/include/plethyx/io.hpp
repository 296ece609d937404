#ifndef PLETHYX_IO_HPP
#define PLETHYX_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "plethyx/plethysm.hpp"
#include "plethyx/schur.hpp"
#include "plethyx/verify.hpp"

namespace plethyx {

/* Text rendering. Terms appear in canonical order (degree descending, then
 * lexicographically descending): "s[4] + s[2,2]", "2*s[3,2,1] - s[1,1]",
 * constants print bare, the zero polynomial prints "0", and an H-prefixed
 * series prints "H*(...)".
 */
std::string to_text(const SchurPoly& p);
std::string to_text(const HPrefixedSeries& s);
std::string to_text(const TruncatedSeries& s);

// "[3,1]", "[]" for the empty partition
std::string bracketed(const Partition& p);

/* JSON forms. SchurPoly: {"terms":[{"partition":[3,1],"coeff":2}, ...]} in
 * canonical order. HPrefixedSeries adds {"h_prefixed": true}; TruncatedSeries
 * adds {"truncated_at": d}. Coefficients are JSON numbers when they fit
 * 64 bits and decimal strings otherwise.
 */
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const SchurPoly& p);
nlohmann::json to_json(const HPrefixedSeries& s);
nlohmann::json to_json(const TruncatedSeries& s);
nlohmann::json to_json(const SweepReport& r);

SchurPoly schur_from_json(const nlohmann::json& j); // throws parse_error

/* Basis specs on the command line: "s:3,1" (Schur), "h:2,1" / "e:2,1"
 * (products of complete homogeneous / elementary functions, any nonnegative
 * exponents), with "s:[]" etc. for empty index vectors.
 */
struct BasisSpec {
    char basis = 's'; // 's', 'h' or 'e'
    IntVector index;
};

BasisSpec parse_basis_spec(std::string_view text); // throws parse_error
SchurPoly to_schur(const BasisSpec& spec);

} // namespace plethyx

#endif
