#include "fstruct/chart.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "fstruct/errors.hpp"
#include "fstruct/parser.hpp"

namespace fstruct {

Chart::Chart(std::vector<std::string> vars, std::vector<Expr> nonvanishing)
    : vars_(std::move(vars)), nonvanishing_(std::move(nonvanishing)) {
  if (vars_.empty()) throw std::invalid_argument("chart needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate chart variable '" + v + "'");
  }
  for (const auto& e : nonvanishing_) {
    if (e.nvars() != vars_.size()) throw DimensionMismatch("constraint over a different chart");
    if (e.is_zero()) throw std::invalid_argument("nonvanishing constraint is identically zero");
  }
}

Chart Chart::parse(std::vector<std::string> vars, std::span<const std::string> nonvanishing) {
  std::vector<Expr> exprs;
  for (const auto& s : nonvanishing) exprs.push_back(fstruct::parse_expr(s, vars));
  return Chart(std::move(vars), std::move(exprs));
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

Expr Chart::parse_expr(std::string_view source) const { return fstruct::parse_expr(source, vars_); }

std::string Chart::str(const Expr& e) const { return to_string(e, vars_); }

bool Chart::admissible(std::span<const Rational> point) const {
  for (const auto& e : nonvanishing_) {
    auto v = e.evaluate(point);
    if (!v || is_zero(*v)) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> Chart::sample_points(std::size_t count, std::uint64_t seed,
                                                        std::span<const Expr> defined) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<std::vector<Rational>> out;
  const std::size_t budget = 200 * std::max<std::size_t>(count, 1);
  for (std::size_t attempt = 0; attempt < budget && out.size() < count; ++attempt) {
    std::vector<Rational> p;
    p.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      p.push_back(q);
    }
    if (!admissible(p)) continue;
    bool ok = std::all_of(defined.begin(), defined.end(),
                          [&](const Expr& e) { return e.evaluate(p).has_value(); });
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

VectorField::VectorField(std::vector<Expr> components) : comps_(std::move(components)) {
  for (const auto& c : comps_) {
    if (c.nvars() != comps_.size()) {
      throw DimensionMismatch("vector field component lives on a chart of another dimension");
    }
  }
}

VectorField VectorField::zero(std::size_t n) { return VectorField(std::vector<Expr>(n, Expr(n))); }

VectorField VectorField::unit(std::size_t n, std::size_t i) {
  std::vector<Expr> c(n, Expr(n));
  c.at(i) = Expr::constant(n, Rational(1));
  return VectorField(std::move(c));
}

bool VectorField::is_zero() const noexcept { return first_nonzero() == comps_.size(); }

std::size_t VectorField::first_nonzero() const noexcept {
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (!comps_[i].is_zero()) return i;
  }
  return comps_.size();
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("vector fields of different dimension");
  VectorField r = a;
  for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] += b.comps_[i];
  return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("vector fields of different dimension");
  VectorField r = a;
  for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] -= b.comps_[i];
  return r;
}

VectorField operator*(const Expr& f, const VectorField& v) {
  VectorField r = v;
  for (auto& c : r.comps_) c = f * c;
  return r;
}

Expr VectorField::apply(const Expr& f) const {
  if (f.nvars() != dim()) throw DimensionMismatch("function and field on different charts");
  Expr sum(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (comps_[j].is_zero() || !f.involves(j)) continue;
    sum += comps_[j] * f.derivative(j);
  }
  return sum;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (x.dim() != y.dim()) {
    throw DimensionMismatch("bracket of fields with " + std::to_string(x.dim()) + " and " +
                            std::to_string(y.dim()) + " components");
  }
  std::vector<Expr> out;
  out.reserve(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out.push_back(x.apply(y[i]) - y.apply(x[i]));
  return VectorField(std::move(out));
}

std::vector<VectorField> coordinate_frame(std::size_t n) {
  std::vector<VectorField> frame;
  frame.reserve(n);
  for (std::size_t i = 0; i < n; ++i) frame.push_back(VectorField::unit(n, i));
  return frame;
}

std::string to_string(const VectorField& v, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string d = "∂" + names[i];
    if (v[i].is_one()) {
      out += d;
    } else {
      out += "(" + to_string(v[i], names) + ")*" + d;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace fstruct
