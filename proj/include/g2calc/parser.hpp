#pragma once

#include <string>
#include <variant>

#include "g2calc/differential_form.hpp"
#include "g2calc/vector_field.hpp"

namespace g2calc {

/// Value of an evaluated expression: a differential form or a vector field.
using ParsedValue = std::variant<DifferentialForm, VectorField>;

/// Parses and evaluates an expression on an n-dimensional chart.
///
/// Grammar, loosest binding first, all operators left associative:
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('^' factor)*
///   factor  := primary (['*'] primary)*        juxtaposition multiplies
///   primary := rational | 'x'N | 'dx[' ints ']' | '@' name | '(' expr ')'
///            | 'd(' expr ')' | 'i_[' exprs '](' expr ')'
///            | 'L_[' exprs '](' expr ')' | '[' exprs ']'
/// Bracketed lists are vector-field literals and must carry exactly n
/// degree-0 components.  dx indices are 1-based; out-of-order tuples are
/// sorted with sign absorption and repeated indices annihilate the term.
/// '*' needs a degree-0 operand; '^' needs two forms; '+' needs matching
/// kinds and degrees.  Failures raise ParseError with a byte offset.
ParsedValue parse_expression(const std::string& input, int ambient_dim);

/// parse_expression, then require a form / a field.
DifferentialForm parse_form(const std::string& input, int ambient_dim);
VectorField parse_field(const std::string& input, int ambient_dim);

/// Canonical text of a value.  parse_expression inverts this exactly:
/// forms print as signed coefficient/basis pairs, fields as bracketed
/// component lists.
std::string print_value(const ParsedValue& v);

}  // namespace g2calc
