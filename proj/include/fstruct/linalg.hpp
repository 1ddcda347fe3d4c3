#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace fstruct {

/// Exact elimination over any field whose scalars provide `is_zero(s)` and
/// + - * /. Used with Rational (numeric rank), Expr (rational functions) and
/// ComplexExpr (Gaussian rational functions). Each vector is one column.
template <typename Scalar>
using Columns = std::vector<std::vector<Scalar>>;

/// Rank of the span of `columns` (all of equal length). Fraction-free
/// (Bareiss) elimination: every update is a cross-multiplication divided
/// exactly by the previous pivot.
template <typename Scalar>
std::size_t rank(Columns<Scalar> columns) {
  if (columns.empty()) return 0;
  const std::size_t rows = columns.front().size();
  // Work on rows = input columns so that pivots select independent inputs.
  auto& m = columns;
  std::size_t r = 0;
  std::optional<Scalar> previous;
  for (std::size_t c = 0; c < rows && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Scalar pivot = m[r][c];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const Scalar factor = m[i][c];
      for (std::size_t k = c; k < rows; ++k) {
        Scalar v = pivot * m[i][k] - factor * m[r][k];
        if (previous) v = v / *previous;
        m[i][k] = std::move(v);
      }
    }
    previous = pivot;
    ++r;
  }
  return r;
}

/// Indices of a maximal independent subset, chosen greedily left to right.
template <typename Scalar>
std::vector<std::size_t> independent_subset(const Columns<Scalar>& columns) {
  std::vector<std::size_t> picked;
  Columns<Scalar> acc;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    acc.push_back(columns[j]);
    if (rank(acc) == acc.size()) {
      picked.push_back(j);
    } else {
      acc.pop_back();
    }
  }
  return picked;
}

/// Coefficients c with sum_k c_k basis_k = target, or nullopt when target is
/// outside the span. `basis` must be independent. Gauss-Jordan on the
/// augmented system.
template <typename Scalar>
std::optional<std::vector<Scalar>> solve_in_span(const Columns<Scalar>& basis,
                                                 const std::vector<Scalar>& target,
                                                 const Scalar& zero) {
  const std::size_t rows = target.size();
  const std::size_t k = basis.size();
  // Row-major augmented matrix [basis | target].
  std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(k + 1, zero));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
    a[i][k] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const Scalar inv_pivot = a[r][c];
    for (std::size_t j = c; j <= k; ++j) a[r][j] = a[r][j] / inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!is_zero(a[i][k])) return std::nullopt;
  }
  std::vector<Scalar> coeffs(k, zero);
  for (std::size_t i = 0; i < r; ++i) coeffs[pivot_col[i]] = a[i][k];
  return coeffs;
}

}  // namespace fstruct
