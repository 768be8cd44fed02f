#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdet {

/// Error categories raised by the library. Every throwing operation
/// documents which of these it can produce.
enum class errc {
    invalid_group,           // bad moduli (empty, or an entry <= 0)
    invalid_element,         // rank mismatch or residue outside the group
    subgroup_mismatch,       // subgroup does not belong to the given group
    level_mismatch,          // cyclotomic values from different fields mixed
    division_by_zero,        // field inverse of zero
    domain,                  // argument outside the mathematical domain
    oracle_bound,            // group order above the Leibniz expansion bound
    incomplete_assignment,   // evaluation point missing a used variable
    no_separator,            // separating character requested for g in H
    internal_consistency,    // a proven statement failed; implementation bug
    theorem_violation,       // a factorization identity failed; implementation bug
    singular_element,        // group-algebra element with vanishing determinant
    parse,                   // malformed input text
};

std::string_view to_string(errc code);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

/// Parse failure with the byte offset of the offending character.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(errc::parse, msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

}  // namespace gdet
