#pragma once

#include <span>
#include <string>
#include <string_view>

#include "homlie/ring/scalar.hpp"

namespace homlie {

/// Parses an exact expression over the named variables.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | variable | '(' expr ')'
///
/// Integer literals are arbitrary precision and `p/q` is ordinary division,
/// so "3/4" is the rational 3/4 and "1/x" a rational function. Whitespace is
/// ignored. Errors are ParseError with line 1 and the 1-based column.
Scalar parse_expression(std::string_view text, std::span<const std::string> variables);

}  // namespace homlie
