#pragma once

// Random expression trees and fields for property tests.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "fstruct/chart.hpp"
#include "fstruct/parser.hpp"

namespace fstruct::testing {

class RandomExprs {
 public:
  RandomExprs(std::size_t nvars, std::uint64_t seed) : n_(nvars), rng_(seed) {}

  std::size_t nvars() const { return n_; }
  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  ExprTreePtr number(int lo = -4, int hi = 4) {
    auto t = std::make_shared<ExprTree>();
    t->kind = ExprTree::Kind::kNumber;
    t->number = Rational(uniform(lo, hi));
    return t;
  }

  ExprTreePtr variable() {
    auto t = std::make_shared<ExprTree>();
    t->kind = ExprTree::Kind::kVariable;
    t->variable = static_cast<std::size_t>(uniform(0, static_cast<int>(n_) - 1));
    return t;
  }

  static ExprTreePtr binary(ExprTree::Kind kind, ExprTreePtr a, ExprTreePtr b) {
    auto t = std::make_shared<ExprTree>();
    t->kind = kind;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
  }

  /// Random tree of bounded depth. Divisors are never identically zero.
  ExprTreePtr tree(int depth, bool allow_division = true) {
    if (depth <= 0 || uniform(0, 3) == 0) return uniform(0, 2) == 0 ? number() : variable();
    using K = ExprTree::Kind;
    switch (uniform(0, allow_division ? 5 : 4)) {
      case 0:
        return binary(K::kAdd, tree(depth - 1, allow_division), tree(depth - 1, allow_division));
      case 1:
        return binary(K::kSub, tree(depth - 1, allow_division), tree(depth - 1, allow_division));
      case 2:
      case 3:
        return binary(K::kMul, tree(depth - 1, allow_division), tree(depth - 1, allow_division));
      case 4: {
        auto t = std::make_shared<ExprTree>();
        t->kind = K::kPow;
        t->lhs = tree(depth - 1, allow_division);
        t->exponent = uniform(0, 2);
        return t;
      }
      default: {
        auto d = tree(depth - 1, allow_division);
        if (canonicalize(*d, n_).is_zero()) d = number(1, 5);
        return binary(K::kDiv, tree(depth - 1, allow_division), d);
      }
    }
  }

  Expr expr(int depth = 3, bool allow_division = true) {
    return canonicalize(*tree(depth, allow_division), n_);
  }

  Expr polynomial(int depth = 3) { return expr(depth, false); }

  VectorField field(int depth = 2, bool allow_division = false) {
    std::vector<Expr> c;
    for (std::size_t i = 0; i < n_; ++i) c.push_back(expr(depth, allow_division));
    return VectorField(std::move(c));
  }

  std::vector<Rational> point() {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n_; ++i) {
      Rational q(uniform(-7, 7), uniform(1, 4));
      q.canonicalize();
      p.push_back(q);
    }
    return p;
  }

 private:
  std::size_t n_;
  std::mt19937_64 rng_;
};

inline std::vector<std::string> default_names(std::size_t n) {
  static const char* base[] = {"x", "y", "z", "t", "u", "v"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < 6 ? base[i] : "x" + std::to_string(i + 1));
  }
  return out;
}

}  // namespace fstruct::testing
