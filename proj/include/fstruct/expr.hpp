#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "fstruct/poly.hpp"
#include "fstruct/rational.hpp"

namespace fstruct {

/// Exact multivariate rational function P/Q over Q.
///
/// Every value is canonical: gcd(P, Q) = 1, Q has leading coefficient 1 under
/// grlex, and zero is 0/1. Equality is therefore structural and `is_zero` is a
/// proof, not a probe. Values are immutable once built.
class Expr {
 public:
  /// The zero function over `nvars` variables.
  explicit Expr(std::size_t nvars = 0) : num_(nvars), den_(Poly::constant(nvars, Rational(1))) {}

  static Expr constant(std::size_t nvars, const Rational& c);
  static Expr variable(std::size_t nvars, std::size_t index);
  static Expr polynomial(Poly p);
  /// Canonicalizes p/q. Throws DivisionByZero when q is the zero polynomial.
  static Expr fraction(Poly p, Poly q);

  std::size_t nvars() const noexcept { return num_.nvars(); }
  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  bool involves(std::size_t var) const noexcept { return num_.involves(var) || den_.involves(var); }

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  /// Throws DivisionByZero when b is zero.
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr& operator+=(const Expr& b) { return *this = *this + b; }
  Expr& operator-=(const Expr& b) { return *this = *this - b; }
  Expr& operator*=(const Expr& b) { return *this = *this * b; }

  friend Expr operator*(const Expr& a, const Rational& c);
  friend Expr operator*(const Rational& c, const Expr& a) { return a * c; }

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Integer power; negative exponents invert (DivisionByZero for 0^-k).
  Expr pow(long exponent) const;

  /// Exact partial derivative with respect to variable `var`.
  Expr derivative(std::size_t var) const;

  /// Value at a rational point, or nullopt where the denominator vanishes.
  std::optional<Rational> evaluate(std::span<const Rational> point) const;

 private:
  Expr(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

inline bool is_zero(const Expr& e) noexcept { return e.is_zero(); }

/// Prints in the expression grammar; parsing the output yields an equal Expr.
std::string to_string(const Expr& e, std::span<const std::string> names);

}  // namespace fstruct
