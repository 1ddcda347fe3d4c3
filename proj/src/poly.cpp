#include "fstruct/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fstruct/errors.hpp"

namespace fstruct {

namespace {

std::uint32_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grlex_compare(a, b) == std::strong_ordering::greater;
  }
};

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

}  // namespace

std::strong_ordering grlex_compare(const Exponents& a, const Exponents& b) {
  if (auto c = degree_of(a) <=> degree_of(b); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (!fstruct::is_zero(c)) p.terms_.push_back({Exponents(nvars, 0), c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), Rational(1));
}

Poly Poly::monomial(Exponents exponents, const Rational& c) {
  Poly p(exponents.size());
  if (!fstruct::is_zero(c)) p.terms_.push_back({std::move(exponents), c});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::map<Exponents, Rational, GrlexGreater> acc;
  for (auto& t : terms) {
    if (t.exponents.size() != nvars) throw DimensionMismatch("term arity differs from nvars");
    acc[std::move(t.exponents)] += t.coefficient;
  }
  Poly p(nvars);
  for (auto& [e, c] : acc) {
    if (!fstruct::is_zero(c)) p.terms_.push_back({e, c});
  }
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.front().exponents) == 0);
}

bool Poly::is_one() const noexcept {
  return terms_.size() == 1 && degree_of(terms_.front().exponents) == 0 &&
         terms_.front().coefficient == 1;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.back().coefficient;
}

std::uint32_t Poly::total_degree() const noexcept {
  return terms_.empty() ? 0 : degree_of(terms_.front().exponents);
}

std::uint32_t Poly::degree_in(std::size_t var) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[var]);
  return d;
}

void Poly::check_compatible(const Poly& other) const {
  if (nvars_ != other.nvars_) {
    throw DimensionMismatch("polynomials over " + std::to_string(nvars_) + " and " +
                            std::to_string(other.nvars_) + " variables");
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  check_compatible(other);
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    auto c = grlex_compare(a->exponents, b->exponents);
    if (c == std::strong_ordering::greater) {
      merged.push_back(std::move(*a++));
    } else if (c == std::strong_ordering::less) {
      merged.push_back(*b++);
    } else {
      Rational s = a->coefficient + b->coefficient;
      if (!fstruct::is_zero(s)) merged.push_back({std::move(a->exponents), s});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
  for (; b != other.terms_.end(); ++b) merged.push_back(*b);
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (fstruct::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.is_constant()) return a * b.constant_value();
  if (a.is_constant()) return b * a.constant_value();
  std::map<Exponents, Rational, GrlexGreater> acc;
  Exponents e(a.nvars_);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exponents[i] + t.exponents[i];
      Rational c = s.coefficient * t.coefficient;
      auto [it, inserted] = acc.try_emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [ex, c] : acc) {
    if (!fstruct::is_zero(c)) r.terms_.push_back({ex, c});
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents ||
        a.terms_[i].coefficient != b.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(nvars_, Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Term d = t;
    d.coefficient *= t.exponents[var];
    d.exponents[var] -= 1;
    out.push_back(std::move(d));
  }
  // Decrementing one exponent can reorder terms, so rebuild.
  return from_terms(nvars_, std::move(out));
}

Poly Poly::monic() const {
  if (terms_.empty() || leading_coefficient() == 1) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw DivisionByZero();
  if (divisor.is_constant()) return *this * Rational(1 / divisor.constant_value());
  Poly quotient(nvars_);
  Poly rem = *this;
  const Term& lead = divisor.leading_term();
  std::vector<Term> qterms;
  while (!rem.is_zero()) {
    const Term& r = rem.leading_term();
    if (!divides(lead.exponents, r.exponents)) return std::nullopt;
    Exponents e(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = r.exponents[i] - lead.exponents[i];
    Rational c = r.coefficient / lead.coefficient;
    Poly t = monomial(e, c);
    rem -= t * divisor;
    qterms.push_back({std::move(e), c});
  }
  // Quotient terms are produced in strictly decreasing order.
  quotient.terms_ = std::move(qterms);
  return quotient;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Term c = t;
    c.exponents[var] = 0;
    buckets[t.exponents[var]].push_back(std::move(c));
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(nvars_, std::move(b)));
  return out;
}

Poly Poly::from_coefficients(std::size_t var, std::span<const Poly> coefficients,
                             std::size_t nvars) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    for (const auto& t : coefficients[k].terms()) {
      Term c = t;
      c.exponents[var] += static_cast<std::uint32_t>(k);
      terms.push_back(std::move(c));
    }
  }
  return from_terms(nvars, std::move(terms));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point has wrong arity");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t k = 0; k < t.exponents[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// gcd: content / primitive-part recursion on the lowest-index variable, with a
// subresultant remainder sequence for the primitive parts.

namespace {

using UPoly = std::vector<Poly>;  // coefficients over Q[other vars], index = degree

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int degree(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("inexact division inside polynomial gcd");
  return *q;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const int db = degree(b);
  const Poly& lcb = b.back();
  int e = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    Poly lcr = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c = c * lcb;
    for (int k = 0; k <= db; ++k) a[k + shift] -= lcr * b[k];
    a.pop_back();
    trim(a);
    --e;
  }
  if (e > 0) {
    Poly f = lcb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

// Last nonzero remainder of the subresultant sequence for primitive a, b;
// empty when the gcd is a unit.
UPoly subresultant_gcd(UPoly a, UPoly b, std::size_t nvars) {
  if (degree(a) < degree(b)) std::swap(a, b);
  Poly g = Poly::constant(nvars, Rational(1));
  Poly h = g;
  for (;;) {
    const int d = degree(a) - degree(b);
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    if (degree(r) == 0) return {};
    a = std::move(b);
    Poly divisor = g * h.pow(static_cast<unsigned>(d));
    for (auto& c : r) c = exact(c, divisor);
    b = std::move(r);
    g = a.back();
    if (d == 1) {
      h = g;
    } else if (d > 1) {
      h = exact(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
    }
  }
}

Poly monomial_gcd(const Term& t, const Poly& p) {
  Exponents e = t.exponents;
  for (const auto& s : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], s.exponents[i]);
  }
  return Poly::monomial(std::move(e), Rational(1));
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content_of(const std::vector<Poly>& coefficients, std::size_t nvars) {
  Poly c(nvars);
  for (const auto& k : coefficients) {
    if (k.is_zero()) continue;
    c = gcd_impl(c, k);
    if (c.is_one()) break;
  }
  return c;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  const std::size_t n = a.nvars();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::constant(n, Rational(1));
  if (a.size() == 1) return monomial_gcd(a.leading_term(), b);
  if (b.size() == 1) return monomial_gcd(b.leading_term(), a);
  if (a == b) return a.monic();

  std::size_t var = 0;
  while (var < n && !a.involves(var) && !b.involves(var)) ++var;
  if (!a.involves(var)) return gcd_impl(a, content_of(b.coefficients_in(var), n));
  if (!b.involves(var)) return gcd_impl(content_of(a.coefficients_in(var), n), b);

  UPoly ua = a.coefficients_in(var);
  UPoly ub = b.coefficients_in(var);
  Poly ca = content_of(ua, n);
  Poly cb = content_of(ub, n);
  for (auto& c : ua) c = exact(c, ca);
  for (auto& c : ub) c = exact(c, cb);
  Poly common = gcd_impl(ca, cb);

  UPoly last = subresultant_gcd(std::move(ua), std::move(ub), n);
  if (last.empty()) return common.monic();
  Poly cl = content_of(last, n);
  for (auto& c : last) c = exact(c, cl);
  return (common * Poly::from_coefficients(var, last, n)).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("gcd of polynomials over different rings");
  return gcd_impl(a, b);
}

std::string to_string(const Poly& p, std::span<const std::string> names) {
  if (names.size() != p.nvars()) throw DimensionMismatch("name list does not match arity");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coefficient;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    c = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace fstruct
