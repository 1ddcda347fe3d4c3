#include "fstruct/expr.hpp"

#include <stdexcept>

#include "fstruct/errors.hpp"

namespace fstruct {

namespace {

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("inexact division while canonicalizing a fraction");
  return *q;
}

void check_same_ring(const Expr& a, const Expr& b) {
  if (a.nvars() != b.nvars()) {
    throw DimensionMismatch("expressions over " + std::to_string(a.nvars()) + " and " +
                            std::to_string(b.nvars()) + " variables");
  }
}

}  // namespace

Expr Expr::constant(std::size_t nvars, const Rational& c) {
  return Expr(Poly::constant(nvars, c), Poly::constant(nvars, Rational(1)), 0);
}

Expr Expr::variable(std::size_t nvars, std::size_t index) {
  return Expr(Poly::variable(nvars, index), Poly::constant(nvars, Rational(1)), 0);
}

Expr Expr::polynomial(Poly p) {
  std::size_t n = p.nvars();
  return Expr(std::move(p), Poly::constant(n, Rational(1)), 0);
}

Expr Expr::fraction(Poly p, Poly q) {
  if (p.nvars() != q.nvars()) throw DimensionMismatch("numerator and denominator arity differ");
  if (q.is_zero()) throw DivisionByZero();
  const std::size_t n = p.nvars();
  if (p.is_zero()) return Expr(n);
  if (!q.is_constant()) {
    Poly g = gcd(p, q);
    if (!g.is_one()) {
      p = exact(p, g);
      q = exact(q, g);
    }
  }
  Rational lc = q.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    p *= inv;
    q *= inv;
  }
  return Expr(std::move(p), std::move(q), 0);
}

Expr Expr::operator-() const { return Expr(-num_, den_, 0); }

Expr operator+(const Expr& a, const Expr& b) {
  check_same_ring(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return Expr(a.num_ + b.num_, a.den_, 0);
    return Expr::fraction(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_one()) return Expr(a.num_ * b.den_ + b.num_, b.den_, 0);
  if (b.den_.is_one()) return Expr(a.num_ + b.num_ * a.den_, a.den_, 0);
  Poly g = gcd(a.den_, b.den_);
  Poly bd = exact(b.den_, g);
  Poly ad = exact(a.den_, g);
  return Expr::fraction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Expr(a.nvars());
  if (a.den_.is_one() && b.den_.is_one()) return Expr(a.num_ * b.num_, a.den_, 0);
  // Cross-cancel; both inputs are already reduced.
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_one()) {
    Poly g = gcd(an, bd);
    if (!g.is_one()) {
      an = exact(an, g);
      bd = exact(bd, g);
    }
  }
  if (!ad.is_one()) {
    Poly g = gcd(bn, ad);
    if (!g.is_one()) {
      bn = exact(bn, g);
      ad = exact(ad, g);
    }
  }
  Poly num = an * bn;
  Poly den = ad * bd;
  Rational lc = den.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  return Expr(std::move(num), std::move(den), 0);
}

Expr operator*(const Expr& a, const Rational& c) {
  if (is_zero(c)) return Expr(a.nvars());
  return Expr(a.num_ * c, a.den_, 0);
}

Expr operator/(const Expr& a, const Expr& b) {
  check_same_ring(a, b);
  if (b.is_zero()) throw DivisionByZero();
  Rational lc = b.num_.leading_coefficient();
  Expr inv(b.den_ * Rational(1 / lc), b.num_ * Rational(1 / lc), 0);
  return a * inv;
}

Expr Expr::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZero();
    return constant(nvars(), Rational(1)) / pow(-exponent);
  }
  const auto k = static_cast<unsigned>(exponent);
  // Powers of coprime polynomials stay coprime.
  return Expr(num_.pow(k), den_.pow(k), 0);
}

Expr Expr::derivative(std::size_t var) const {
  if (var >= nvars()) throw std::out_of_range("differentiation variable out of range");
  if (!involves(var)) return Expr(nvars());
  if (den_.is_one()) return Expr(num_.derivative(var), den_, 0);
  Poly top = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return fraction(std::move(top), den_ * den_);
}

std::optional<Rational> Expr::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (fstruct::is_zero(d)) return std::nullopt;
  Rational v = num_.evaluate(point) / d;
  return v;
}

std::string to_string(const Expr& e, std::span<const std::string> names) {
  const Poly& num = e.numerator();
  const Poly& den = e.denominator();
  std::string top = to_string(num, names);
  if (den.is_one()) return top;
  // A single-term numerator with a rational coefficient such as 1/2*x still
  // associates correctly to the left: (1/2*x)/den.
  if (num.size() > 1) top = "(" + top + ")";
  std::string bottom = to_string(den, names);
  bool bare = den.size() == 1;
  if (bare) {
    int factors = 0;
    for (auto k : den.leading_term().exponents) factors += k > 0 ? 1 : 0;
    bare = factors == 1;
  }
  if (!bare) bottom = "(" + bottom + ")";
  return top + "/" + bottom;
}

}  // namespace fstruct
