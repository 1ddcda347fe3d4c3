#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fstruct/rational.hpp"

namespace fstruct {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic comparison: total degree first, then the exponent of
/// the earliest variable.
std::strong_ordering grlex_compare(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exponents;
  Rational coefficient;
};

/// Sparse multivariate polynomial with rational coefficients over a fixed
/// number of variables. Terms are kept sorted by descending grlex order with
/// no zero coefficients, so two equal polynomials are structurally equal.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly monomial(Exponents exponents, const Rational& c);
  /// Terms may arrive in any order; like terms are combined.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  /// Constant term value; only meaningful when is_constant().
  Rational constant_value() const;

  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }
  std::uint32_t total_degree() const noexcept;
  std::uint32_t degree_in(std::size_t var) const noexcept;
  bool involves(std::size_t var) const noexcept { return degree_in(var) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned exponent) const;
  Poly derivative(std::size_t var) const;
  /// Divides by the leading coefficient; zero stays zero.
  Poly monic() const;

  /// Exact quotient when `divisor` divides this polynomial, nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  /// Coefficients as a univariate polynomial in `var`: result[k] multiplies
  /// var^k and does not involve `var`.
  std::vector<Poly> coefficients_in(std::size_t var) const;
  static Poly from_coefficients(std::size_t var, std::span<const Poly> coefficients,
                                std::size_t nvars);

  Rational evaluate(std::span<const Rational> point) const;

 private:
  void check_compatible(const Poly& other) const;

  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Monic greatest common divisor over Q. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Renders the polynomial in the expression grammar using `names` for the
/// variables.
std::string to_string(const Poly& p, std::span<const std::string> names);

}  // namespace fstruct
