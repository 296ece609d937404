#ifndef PLETHYX_ERRORS_HPP
#define PLETHYX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plethyx {

// Input that cannot be parsed (CLI partition / basis specs).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A closed-form operation was called outside the scope it is proved for
// (e.g. lambda_1 > r + 1). These are checked errors, never silent zeros.
struct scope_error : std::domain_error {
    explicit scope_error(const std::string& what) : std::domain_error(what) {}
};

// A configured resource cap was exceeded (monomial oracle degree product).
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// A Schur expansion came out with a non-integer coefficient. This signals an
// internal bug upstream, not bad user input.
struct integrality_error : std::logic_error {
    explicit integrality_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace plethyx

#endif
