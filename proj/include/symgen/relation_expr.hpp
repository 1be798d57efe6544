#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symgen/presentation.hpp"

namespace symgen {

/// Syntax tree of a relation in a progenitor, e.g. `((1 2) * t[1])^3`,
/// `pi * (t[A] * t[B])^2` or `(12)(34)(56) t[1234] t[1256] t[3456] t[7890]`.
///
///   relation := expr [ '=' expr ]
///   expr     := term { ['*'] term }
///   term     := atom { '^' posint }
///   atom     := '(' expr ')' | cycles | 't[' label ']' | 'g[' name ']'
///             | '[' expr ',' expr ']' | name
///   cycles   := cycle { cycle }        cycle := '(' points ')'
///
/// A parenthesised group counts as a cycle when it holds only digits, `x`,
/// `y`, spaces and commas.  With separators, points are 1-based numbers (or
/// single alphabet letters); without, each character is one point of the
/// alphabet 1..9, 0 = 10, x = 11, y = 12.
struct RelationExpr {
  enum class Kind { product, power, commutator, equation, cycles, symmetric, generator, name };

  Kind kind = Kind::product;
  std::vector<RelationExpr> args;
  int exponent = 1;                                // power
  std::vector<std::vector<std::string>> cycles;    // cycles: point tokens as written
  std::string text;                                // label, generator name or bound name
  std::size_t line = 1;                            // source position (not compared)
  std::size_t column = 1;

  static RelationExpr make_product(std::vector<RelationExpr> factors);
  static RelationExpr make_power(RelationExpr base, int k);
  static RelationExpr make_symmetric(std::string label);
  static RelationExpr make_cycles(std::vector<std::vector<std::string>> cycles);

  friend bool operator==(const RelationExpr& a, const RelationExpr& b);
};

/// Parses one relation.  `line` and `column` give the position of text[0]
/// in the enclosing document for diagnostics.
RelationExpr parse_relation(std::string_view text, std::size_t line = 1, std::size_t column = 1);
/// Parses relations separated by top-level commas, semicolons or newlines.
std::vector<RelationExpr> parse_relations(std::string_view text, std::size_t line = 1, std::size_t column = 1);

std::string to_string(const RelationExpr& e);

/// Number of symmetric-generator atoms, counted with multiplicity through powers.
std::size_t t_length(const RelationExpr& e);
/// True if the expression mentions the given bound name anywhere.
bool mentions(const RelationExpr& e, std::string_view name);
/// Distinct `t[...]` labels, in order of first appearance.
std::vector<std::string> symmetric_labels(const RelationExpr& e);

}  // namespace symgen
