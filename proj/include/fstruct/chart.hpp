#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fstruct/expr.hpp"

namespace fstruct {

/// Coordinate chart: ordered variable names plus the functions that must not
/// vanish on the domain. Constraints only gate numeric sampling; symbolic
/// identities are never reduced modulo them.
class Chart {
 public:
  /// Throws std::invalid_argument for an empty or duplicated variable list or
  /// an identically zero constraint.
  Chart(std::vector<std::string> vars, std::vector<Expr> nonvanishing = {});
  /// Constraint strings are parsed in the chart's own variables.
  static Chart parse(std::vector<std::string> vars, std::span<const std::string> nonvanishing);

  std::size_t dim() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<Expr>& nonvanishing() const noexcept { return nonvanishing_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Expr parse_expr(std::string_view source) const;
  std::string str(const Expr& e) const;

  Expr zero() const { return Expr(dim()); }
  Expr one() const { return Expr::constant(dim(), Rational(1)); }
  Expr constant(const Rational& c) const { return Expr::constant(dim(), c); }
  Expr var(std::size_t i) const { return Expr::variable(dim(), i); }

  /// True when every constraint is defined and nonzero at `point`.
  bool admissible(std::span<const Rational> point) const;

  /// Deterministic rejection sampling of admissible rational points. Points
  /// must also keep every expression in `defined` finite. Returns fewer than
  /// `count` points when the attempt budget runs out.
  std::vector<std::vector<Rational>> sample_points(std::size_t count, std::uint64_t seed,
                                                   std::span<const Expr> defined = {}) const;

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.vars_ == b.vars_ && a.nonvanishing_ == b.nonvanishing_;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<Expr> nonvanishing_;
};

/// Vector field in the coordinate frame.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<Expr> components);
  static VectorField zero(std::size_t n);
  /// The coordinate field along variable `i`.
  static VectorField unit(std::size_t n, std::size_t i);

  std::size_t dim() const noexcept { return comps_.size(); }
  const Expr& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<Expr>& components() const noexcept { return comps_; }

  bool is_zero() const noexcept;
  /// Index of the first nonzero component, or dim() when zero.
  std::size_t first_nonzero() const noexcept;

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Expr& f, const VectorField& v);
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.comps_ == b.comps_; }

  /// Directional derivative X(f).
  Expr apply(const Expr& f) const;

 private:
  std::vector<Expr> comps_;
};

/// Exact Lie bracket [X,Y]^i = sum_j (X^j d_j Y^i - Y^j d_j X^i).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// The commuting frame d_1, ..., d_n.
std::vector<VectorField> coordinate_frame(std::size_t n);
inline std::vector<VectorField> coordinate_frame(const Chart& chart) {
  return coordinate_frame(chart.dim());
}

/// Renders as a sum of coefficient*d_name terms, e.g. "(1/x)*∂y"; "0" for the
/// zero field.
std::string to_string(const VectorField& v, std::span<const std::string> names);

}  // namespace fstruct
