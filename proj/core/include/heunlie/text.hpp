#pragma once

#include <string>
#include <string_view>

#include "heunlie/diffop.hpp"

namespace heunlie {

// Term grammar shared by polynomials and operators (see docs/grammar.md):
//
//   expr  := "0" | term { ("+" | "-") term }
//   term  := [coeff] ["z" ["^" int]] ["D" ["^" int]]
//   coeff := "(" crat ")" | rational ["i"] | "i"
//
// The emitters always write the canonical form "(c) z^e D^k", ordered by
// descending D order and then descending z power, omitting z^0 and D^0.

std::string format_polynomial(const Polynomial& p);
std::string format_operator(const DiffOp& op);

/// Throws ParseError on malformed input or when a D factor appears.
Polynomial parse_polynomial(std::string_view text);
/// Throws ParseError on malformed input.
DiffOp parse_operator(std::string_view text);

}  // namespace heunlie
