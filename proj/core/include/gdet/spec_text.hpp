#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gdet/group.hpp"
#include "gdet/poly.hpp"

namespace gdet {

// Group and element literals
//
//   group       Z<m>xZ<m>x...          e.g. "Z4xZ2"
//   element     (a1,a2,...) or a bare integer for rank-1 groups
//   generators  element[;element...]   empty string -> no generators
//   assignment  x<element>=<rational>[;...]   e.g. "x0=2;x1=1", "x(0,1)=1/2"
//
// Element residues are reduced modulo the moduli, so negatives are fine.

Group parse_group(std::string_view text);
std::string format_group(const Group& g);

Element parse_element(std::string_view text, const Group& g);
std::vector<Element> parse_generators(std::string_view text, const Group& g);

/// Full rational assignment, one value per group element (canonical order).
/// Throws errc::incomplete_assignment if any element has no value and
/// ParseError on duplicates or malformed text.
std::vector<Rational> parse_assignment(std::string_view text, const Group& g);

std::string format_element(const Group& g, long element_index);

/// "x[(a1,a2)]" / "x[a]" names in canonical element order.
std::vector<std::string> variable_names(const Group& g);

// Canonical text forms. These are the machine contract: deterministic,
// and re-parseable to an equal value.
//
//   cyc number  [q0, q1, ...]               phi(N) rationals, power basis
//   polynomial  [1]*x[0]^2 + [-2]*x[1]*x[3] terms in descending graded-lex

std::string to_canonical_text(const CycNumber& z);
std::string to_canonical_text(const Poly& p, const Group& g);

CycNumber parse_cyc(std::string_view text, int level);
Poly parse_poly(std::string_view text, const Group& g, int level);

// Readable (non-canonical) forms: roots of unity are named, "w" at level 3
// and "zN" otherwise, so factors read like the classical notation.

std::string to_pretty_text(const CycNumber& z);
std::string to_pretty_text(const Poly& p, const Group& g);

/// Decimal approximation "a+bi", display only.
std::string to_numeric_text(const CycNumber& z);

}  // namespace gdet
