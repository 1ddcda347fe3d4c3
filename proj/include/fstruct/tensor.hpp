#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fstruct/chart.hpp"
#include "fstruct/expr.hpp"

namespace fstruct {

/// (1,1)-tensor field as an n x n matrix of rational functions; entry (i, j)
/// is the i-th component of the image of d_j.
class TensorField11 {
 public:
  TensorField11() = default;
  /// Throws DimensionMismatch for non-square input or entries over a chart
  /// of another dimension.
  explicit TensorField11(std::vector<std::vector<Expr>> rows);
  static TensorField11 zero(std::size_t n);
  static TensorField11 identity(std::size_t n);
  /// Columns become the images of the frame fields.
  static TensorField11 from_columns(std::span<const VectorField> columns);

  std::size_t dim() const noexcept { return n_; }
  const Expr& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Expr& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  VectorField column(std::size_t j) const;
  std::vector<VectorField> columns() const;

  bool is_zero() const noexcept;
  /// First nonzero entry in row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;
  bool is_constant() const noexcept;

  TensorField11 operator-() const;
  friend TensorField11 operator+(const TensorField11& a, const TensorField11& b);
  friend TensorField11 operator-(const TensorField11& a, const TensorField11& b);
  friend TensorField11 operator*(const TensorField11& a, const TensorField11& b);
  friend TensorField11 operator*(const Rational& c, const TensorField11& a);
  friend VectorField operator*(const TensorField11& a, const VectorField& v);
  friend bool operator==(const TensorField11& a, const TensorField11& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  /// Repeated multiplication, canonical after each product. pow(0) = I.
  TensorField11 pow(unsigned k) const;

  /// Entrywise evaluation; nullopt where any entry is undefined.
  std::optional<std::vector<std::vector<Rational>>> evaluate(std::span<const Rational> point) const;

  const std::vector<Expr>& entries() const noexcept { return entries_; }

 private:
  std::size_t n_ = 0;
  std::vector<Expr> entries_;
};

/// Rows of strings in chart syntax.
TensorField11 parse_tensor(const Chart& chart, const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> to_strings(const TensorField11& t, const Chart& chart);

/// Gauss-Jordan inverse over the rational-function field; nullopt when singular.
std::optional<TensorField11> inverse(const TensorField11& t);

}  // namespace fstruct
