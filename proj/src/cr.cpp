#include "fstruct/cr.hpp"

#include <stdexcept>

#include "fstruct/errors.hpp"
#include "fstruct/linalg.hpp"
#include "fstruct/nijenhuis.hpp"

namespace fstruct {

ComplexExpr operator/(const ComplexExpr& a, const ComplexExpr& b) {
  if (is_zero(b)) throw DivisionByZero();
  if (b.im.is_zero()) return {a.re / b.re, a.im / b.re};
  // (a_r + j a_i)(b_r - j b_i) / (b_r^2 + b_i^2); the norm of a nonzero
  // pair of real rational functions is nonzero.
  const Expr norm = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

namespace {

std::string wrapped(const Expr& e, std::span<const std::string> names) {
  std::string s = to_string(e, names);
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

Columns<ComplexExpr> as_columns(const std::vector<ComplexField>& fields) {
  return Columns<ComplexExpr>(fields.begin(), fields.end());
}

}  // namespace

std::string to_string(const ComplexExpr& z, std::span<const std::string> names) {
  if (z.im.is_zero()) return to_string(z.re, names);
  std::string im = "j*" + wrapped(z.im, names);
  if (z.im.is_constant() && z.im.is_one()) im = "j";
  if (z.re.is_zero()) return im;
  return to_string(z.re, names) + " + " + im;
}

ComplexField complexify(const VectorField& re, const VectorField& im) {
  if (re.dim() != im.dim()) throw DimensionMismatch("real and imaginary parts differ in dimension");
  ComplexField out;
  out.reserve(re.dim());
  for (std::size_t i = 0; i < re.dim(); ++i) out.emplace_back(re[i], im[i]);
  return out;
}

ComplexField conjugate(const ComplexField& v) {
  ComplexField out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(z.conj());
  return out;
}

bool is_zero(const ComplexField& v) {
  for (const auto& z : v) {
    if (!is_zero(z)) return false;
  }
  return true;
}

std::string to_string(const ComplexField& v, std::span<const std::string> names) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i], names);
  }
  return out + ")";
}

ComplexField complex_bracket(const ComplexField& p, const ComplexField& q) {
  if (p.size() != q.size()) throw DimensionMismatch("complex bracket of fields of different dimension");
  const std::size_t n = p.size();
  auto d = [](const ComplexExpr& z, std::size_t k) {
    return ComplexExpr(z.re.derivative(k), z.im.derivative(k));
  };
  ComplexField out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexExpr acc(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_zero(p[k])) acc = acc + p[k] * d(q[i], k);
      if (!is_zero(q[k])) acc = acc - q[k] * d(p[i], k);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

ComplexFrameBundle build_H(const FStructure& s, const TensorField11& fhat) {
  auto checks = verify_fhat(s, fhat);
  if (const auto* bad = checks.first_failure()) {
    throw std::invalid_argument("Fhat rejected: " + bad->name +
                                (bad->residual.empty() ? "" : " (" + bad->residual + ")"));
  }
  ComplexFrameBundle h;
  h.real_span = distribution_of(s.l).basis;
  std::vector<ComplexField> generators;
  for (const auto& e : h.real_span) generators.push_back(complexify(e, -(fhat * e)));
  for (std::size_t k : independent_subset(as_columns(generators))) h.basis.push_back(generators[k]);
  if (2 * h.complex_dim() != h.real_span.size()) {
    throw InconsistencyError("dim H = " + std::to_string(h.complex_dim()) + " but dim D_l = " +
                             std::to_string(h.real_span.size()));
  }
  return h;
}

ComplexFrameBundle conjugate(const ComplexFrameBundle& h) {
  ComplexFrameBundle out;
  out.real_span = h.real_span;
  for (const auto& v : h.basis) out.basis.push_back(conjugate(v));
  return out;
}

bool check_disjointness(const ComplexFrameBundle& h) {
  if (h.basis.empty()) return h.real_span.empty();
  auto stacked = as_columns(h.basis);
  for (const auto& v : h.basis) stacked.push_back(conjugate(v));
  if (rank(stacked) != 2 * h.complex_dim()) return false;

  // Re and Im of the basis span exactly real_span.
  Columns<Expr> real;
  for (const auto& v : h.real_span) real.push_back(v.components());
  const std::size_t dl = rank(real);
  if (dl != h.real_span.size()) return false;
  Columns<Expr> both = real;
  Columns<Expr> parts;
  for (const auto& v : h.basis) {
    std::vector<Expr> re, im;
    for (const auto& z : v) {
      re.push_back(z.re);
      im.push_back(z.im);
    }
    parts.push_back(re);
    parts.push_back(im);
    both.push_back(std::move(re));
    both.push_back(std::move(im));
  }
  return rank(parts) == dl && rank(both) == dl;
}

bool check_involutive(const ComplexFrameBundle& h) {
  if (h.basis.empty()) return true;
  const auto cols = as_columns(h.basis);
  const ComplexExpr zero(h.basis.front().front().re.nvars());
  for (std::size_t a = 0; a < h.basis.size(); ++a) {
    for (std::size_t b = a; b < h.basis.size(); ++b) {
      ComplexField br = complex_bracket(h.basis[a], h.basis[b]);
      if (is_zero(br)) continue;
      if (!solve_in_span(cols, br, zero)) return false;
    }
  }
  return true;
}

bool check_eigenbundle(const ComplexFrameBundle& h, const TensorField11& fhat) {
  for (const auto& p : h.basis) {
    VectorField re, im;
    {
      std::vector<Expr> r, i;
      for (const auto& z : p) {
        r.push_back(z.re);
        i.push_back(z.im);
      }
      re = VectorField(std::move(r));
      im = VectorField(std::move(i));
    }
    // Fhat(re + j im) = j(re + j im) = -im + j re
    if (!(fhat * re == -im) || !(fhat * im == re)) return false;
  }
  return true;
}

IdentitySuite fhat_bracket_suite(const FStructure& s, const TensorField11& fhat) {
  const auto basis = distribution_of(s.l).basis;
  IdentitySuite suite;
  IdentityCheck sum{"l([FhatX,Y]+[X,FhatY])=[FhatX,Y]+[X,FhatY]", true, std::nullopt, {}};
  IdentityCheck prod{"l[FhatX,FhatY]=[FhatX,FhatY]", true, std::nullopt, {}};
  auto record = [&](IdentityCheck& c, const VectorField& v, std::size_t a, std::size_t b) {
    VectorField d = s.l * v - v;
    if (c.passed && !d.is_zero()) {
      c.passed = false;
      c.witness = std::pair{a, b};
      c.residual = to_string(d, s.chart.vars());
    }
  };
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const VectorField fa = fhat * basis[a];
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const VectorField fb = fhat * basis[b];
      record(sum, lie_bracket(fa, basis[b]) + lie_bracket(basis[a], fb), a, b);
      record(prod, lie_bracket(fa, fb), a, b);
    }
  }
  suite.checks = {std::move(sum), std::move(prod)};
  return suite;
}

CrReport check_cr(const FStructure& s, const TensorField11& fhat) {
  CrReport r;
  r.H = build_H(s, fhat);
  r.fhat_checks = fhat_bracket_suite(s, fhat);
  r.fhat_integrable = nijenhuis_of(fhat).is_zero();
  r.disjoint = check_disjointness(r.H);
  r.involutive = check_involutive(r.H);
  r.eigenbundle = check_eigenbundle(r.H, fhat);
  r.implication_ok = !r.fhat_integrable || r.involutive;
  return r;
}

}  // namespace fstruct
