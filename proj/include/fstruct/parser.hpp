#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fstruct/expr.hpp"
#include "fstruct/rational.hpp"

namespace fstruct {

/// Uncanonicalized syntax tree of the expression DSL:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | base ('^' int)?
///   base   := integer | ident | '(' expr ')'
///
/// `int` may carry a sign, optionally inside parentheses: x^-1, x^(-2).
struct ExprTree {
  enum class Kind { kNumber, kVariable, kNegate, kAdd, kSub, kMul, kDiv, kPow };

  Kind kind;
  std::size_t position = 0;
  Rational number;              // kNumber
  std::size_t variable = 0;     // kVariable
  long exponent = 0;            // kPow
  std::shared_ptr<const ExprTree> lhs;
  std::shared_ptr<const ExprTree> rhs;
};

using ExprTreePtr = std::shared_ptr<const ExprTree>;

/// Parses `source` into a tree over the variable names `vars` (index order is
/// the chart order). Throws ParseError on syntax errors, unknown variables,
/// and non-integer exponents.
ExprTreePtr parse_tree(std::string_view source, std::span<const std::string> vars);

/// Canonical rational function of a tree. Throws ParseError (carrying the
/// operator position) when a divisor is identically zero.
Expr canonicalize(const ExprTree& tree, std::size_t nvars);

/// Direct evaluation of the tree, bypassing canonicalization. nullopt when any
/// intermediate division hits zero.
std::optional<Rational> evaluate(const ExprTree& tree, std::span<const Rational> point);

/// Fully parenthesized rendering of a tree in the grammar.
std::string to_string(const ExprTree& tree, std::span<const std::string> vars);

/// parse_tree followed by canonicalize.
Expr parse_expr(std::string_view source, std::span<const std::string> vars);

}  // namespace fstruct
