#include "fstruct/tensor.hpp"

#include <stdexcept>

#include "fstruct/errors.hpp"

namespace fstruct {

TensorField11::TensorField11(std::vector<std::vector<Expr>> rows) : n_(rows.size()) {
  entries_.reserve(n_ * n_);
  for (auto& row : rows) {
    if (row.size() != n_) throw DimensionMismatch("tensor field matrix is not square");
    for (auto& e : row) {
      if (e.nvars() != n_) throw DimensionMismatch("tensor entry lives on a chart of another dimension");
      entries_.push_back(std::move(e));
    }
  }
}

TensorField11 TensorField11::zero(std::size_t n) {
  return TensorField11(std::vector<std::vector<Expr>>(n, std::vector<Expr>(n, Expr(n))));
}

TensorField11 TensorField11::identity(std::size_t n) {
  TensorField11 t = zero(n);
  for (std::size_t i = 0; i < n; ++i) t(i, i) = Expr::constant(n, Rational(1));
  return t;
}

TensorField11 TensorField11::from_columns(std::span<const VectorField> columns) {
  const std::size_t n = columns.size();
  TensorField11 t = zero(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].dim() != n) throw DimensionMismatch("column count differs from field dimension");
    for (std::size_t i = 0; i < n; ++i) t(i, j) = columns[j][i];
  }
  return t;
}

VectorField TensorField11::column(std::size_t j) const {
  std::vector<Expr> c;
  c.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) c.push_back((*this)(i, j));
  return VectorField(std::move(c));
}

std::vector<VectorField> TensorField11::columns() const {
  std::vector<VectorField> out;
  out.reserve(n_);
  for (std::size_t j = 0; j < n_; ++j) out.push_back(column(j));
  return out;
}

bool TensorField11::is_zero() const noexcept { return !first_nonzero().has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> TensorField11::first_nonzero() const {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!entries_[k].is_zero()) return std::pair{k / n_, k % n_};
  }
  return std::nullopt;
}

bool TensorField11::is_constant() const noexcept {
  for (const auto& e : entries_) {
    if (!e.is_constant()) return false;
  }
  return true;
}

TensorField11 TensorField11::operator-() const {
  TensorField11 r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

TensorField11 operator+(const TensorField11& a, const TensorField11& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("tensor fields of different dimension");
  TensorField11 r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
  return r;
}

TensorField11 operator-(const TensorField11& a, const TensorField11& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("tensor fields of different dimension");
  TensorField11 r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
  return r;
}

TensorField11 operator*(const TensorField11& a, const TensorField11& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("tensor fields of different dimension");
  const std::size_t n = a.n_;
  TensorField11 r = TensorField11::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Expr& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

TensorField11 operator*(const Rational& c, const TensorField11& a) {
  TensorField11 r = a;
  for (auto& e : r.entries_) e = e * c;
  return r;
}

VectorField operator*(const TensorField11& a, const VectorField& v) {
  if (a.n_ != v.dim()) throw DimensionMismatch("tensor and vector field of different dimension");
  std::vector<Expr> out(a.n_, Expr(a.n_));
  for (std::size_t j = 0; j < a.n_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (a(i, j).is_zero()) continue;
      out[i] += a(i, j) * v[j];
    }
  }
  return VectorField(std::move(out));
}

TensorField11 TensorField11::pow(unsigned k) const {
  TensorField11 r = identity(n_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::optional<std::vector<std::vector<Rational>>> TensorField11::evaluate(
    std::span<const Rational> point) const {
  std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      auto v = (*this)(i, j).evaluate(point);
      if (!v) return std::nullopt;
      out[i][j] = *v;
    }
  }
  return out;
}

TensorField11 parse_tensor(const Chart& chart, const std::vector<std::vector<std::string>>& rows) {
  if (rows.size() != chart.dim()) {
    throw DimensionMismatch("matrix has " + std::to_string(rows.size()) + " rows but the chart has " +
                            std::to_string(chart.dim()) + " variables");
  }
  std::vector<std::vector<Expr>> m;
  for (const auto& row : rows) {
    if (row.size() != chart.dim()) throw DimensionMismatch("matrix is not square");
    std::vector<Expr> r;
    for (const auto& s : row) r.push_back(chart.parse_expr(s));
    m.push_back(std::move(r));
  }
  return TensorField11(std::move(m));
}

std::vector<std::vector<std::string>> to_strings(const TensorField11& t, const Chart& chart) {
  std::vector<std::vector<std::string>> out(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) out[i].push_back(chart.str(t(i, j)));
  }
  return out;
}

std::optional<TensorField11> inverse(const TensorField11& t) {
  const std::size_t n = t.dim();
  std::vector<std::vector<Expr>> a(n, std::vector<Expr>(2 * n, Expr(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = t(i, j);
    a[i][n + i] = Expr::constant(n, Rational(1));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[c], a[p]);
    const Expr pivot = a[c][c];
    for (auto& e : a[c]) e = e / pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Expr f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  TensorField11 r = TensorField11::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a[i][n + j];
  }
  return r;
}

}  // namespace fstruct
