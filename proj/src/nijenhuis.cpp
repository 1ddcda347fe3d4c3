#include "fstruct/nijenhuis.hpp"

#include <stdexcept>

#include "fstruct/errors.hpp"

namespace fstruct {

FrameTable::FrameTable(std::size_t n,
                       const std::function<VectorField(std::size_t, std::size_t)>& value)
    : n_(n) {
  upper_.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) upper_.push_back(value(i, j));
  }
}

std::size_t FrameTable::index(std::size_t i, std::size_t j) const {
  // Row-major position of (i, j), i < j, in the strict upper triangle.
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

VectorField FrameTable::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("frame index out of range");
  if (i == j) return VectorField::zero(n_);
  if (i < j) return upper_[index(i, j)];
  return -upper_[index(j, i)];
}

std::optional<std::pair<std::size_t, std::size_t>> FrameTable::first_nonzero() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!upper_[index(i, j)].is_zero()) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

VectorField nijenhuis_apply(const TensorField11& t, const VectorField& x, const VectorField& y) {
  if (t.dim() != x.dim() || t.dim() != y.dim()) {
    throw DimensionMismatch("Nijenhuis tensor arguments on different charts");
  }
  const VectorField tx = t * x;
  const VectorField ty = t * y;
  VectorField out = lie_bracket(tx, ty) - t * lie_bracket(tx, y) - t * lie_bracket(x, ty);
  VectorField xy = lie_bracket(x, y);
  if (!xy.is_zero()) out = out + t * (t * xy);
  return out;
}

FrameTable nijenhuis_of(const TensorField11& t) {
  const auto frame = coordinate_frame(t.dim());
  return FrameTable(t.dim(), [&](std::size_t i, std::size_t j) {
    return nijenhuis_apply(t, frame[i], frame[j]);
  });
}

IdentityCheck frame_identity(std::string name, const Chart& chart,
                             const std::function<VectorField(std::size_t, std::size_t)>& lhs,
                             const std::function<VectorField(std::size_t, std::size_t)>& rhs) {
  IdentityCheck c{std::move(name), true, std::nullopt, {}};
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    for (std::size_t j = i + 1; j < chart.dim(); ++j) {
      VectorField d = lhs(i, j) - rhs(i, j);
      if (!d.is_zero()) {
        c.passed = false;
        c.witness = std::pair{i, j};
        c.residual = to_string(d, chart.vars());
        return c;
      }
    }
  }
  return c;
}

namespace {

// Frame fields pushed through F, F^2, l and m, computed once per structure.
struct Projected {
  explicit Projected(const FStructure& s)
      : F2(s.F * s.F), e(coordinate_frame(s.dim())), f(s.F.columns()), f2(F2.columns()),
        l(s.l.columns()), m(s.m.columns()) {}

  TensorField11 F2;
  std::vector<VectorField> e, f, f2, l, m;
};

}  // namespace

IdentitySuite nijenhuis_identity_suite(const FStructure& s) {
  const Projected p(s);
  const auto& F = s.F;
  const auto& L = s.l;
  const auto& M = s.m;
  const auto& c = s.chart;
  using V = VectorField;
  auto NF = [&](const V& x, const V& y) { return nijenhuis_apply(F, x, y); };
  auto NL = [&](const V& x, const V& y) { return nijenhuis_apply(L, x, y); };
  auto NM = [&](const V& x, const V& y) { return nijenhuis_apply(M, x, y); };
  auto br = [](const V& x, const V& y) { return lie_bracket(x, y); };

  IdentitySuite suite;
  auto add = [&](const char* name, auto lhs, auto rhs) {
    suite.checks.push_back(frame_identity(name, c, lhs, rhs));
  };
  add("N_F(mX,mY)=F^2[mX,mY]",
      [&](auto i, auto j) { return NF(p.m[i], p.m[j]); },
      [&](auto i, auto j) { return p.F2 * br(p.m[i], p.m[j]); });
  add("mN_F(X,Y)=m[FX,FY]",
      [&](auto i, auto j) { return M * NF(p.e[i], p.e[j]); },
      [&](auto i, auto j) { return M * br(p.f[i], p.f[j]); });
  add("mN_F(FX,FY)=m[F^2X,F^2Y]",
      [&](auto i, auto j) { return M * NF(p.f[i], p.f[j]); },
      [&](auto i, auto j) { return M * br(p.f2[i], p.f2[j]); });
  add("mN_F(lX,lY)=m[FX,FY]",
      [&](auto i, auto j) { return M * NF(p.l[i], p.l[j]); },
      [&](auto i, auto j) { return M * br(p.f[i], p.f[j]); });
  {
    auto rhs = [&](std::size_t i, std::size_t j) {
      return M * br(p.l[i], p.l[j]) + L * br(p.m[i], p.m[j]);
    };
    auto check = frame_identity("N_l(X,Y)=N_m(X,Y)=m[lX,lY]+l[mX,mY]", c,
                                [&](auto i, auto j) { return NL(p.e[i], p.e[j]); }, rhs);
    if (check.passed) {
      check = frame_identity(check.name, c, [&](auto i, auto j) { return NM(p.e[i], p.e[j]); }, rhs);
    }
    suite.checks.push_back(std::move(check));
  }
  add("N_l(lX,lY)=m[lX,lY]",
      [&](auto i, auto j) { return NL(p.l[i], p.l[j]); },
      [&](auto i, auto j) { return M * br(p.l[i], p.l[j]); });
  add("N_l(mX,mY)=l[mX,mY]",
      [&](auto i, auto j) { return NL(p.m[i], p.m[j]); },
      [&](auto i, auto j) { return L * br(p.m[i], p.m[j]); });
  add("N_l(X,Y)=N_l(lX,lY)+N_l(mX,mY)",
      [&](auto i, auto j) { return NL(p.e[i], p.e[j]); },
      [&](auto i, auto j) { return NL(p.l[i], p.l[j]) + NL(p.m[i], p.m[j]); });
  add("mN_F(X,Y)=N_l(FX,FY)",
      [&](auto i, auto j) { return M * NF(p.e[i], p.e[j]); },
      [&](auto i, auto j) { return NL(p.f[i], p.f[j]); });
  {
    auto zero = [&](std::size_t, std::size_t) { return VectorField::zero(s.dim()); };
    // Both orders of every pair, since the mixed terms are not antisymmetric
    // under swapping only one argument.
    auto check = frame_identity("N_l(lX,mY)=N_l(mX,lY)=0", c,
                                [&](auto i, auto j) { return NL(p.l[i], p.m[j]); }, zero);
    if (check.passed) {
      check = frame_identity(check.name, c, [&](auto i, auto j) { return NL(p.m[i], p.l[j]); }, zero);
    }
    if (check.passed) {
      for (std::size_t i = 0; i < s.dim() && check.passed; ++i) {
        VectorField d = NL(p.l[i], p.m[i]);
        if (!d.is_zero()) {
          check.passed = false;
          check.witness = std::pair{i, i};
          check.residual = to_string(d, c.vars());
        }
      }
    }
    suite.checks.push_back(std::move(check));
  }
  add("N_F(mX,mY)=F^2N_l(mX,mY)",
      [&](auto i, auto j) { return NF(p.m[i], p.m[j]); },
      [&](auto i, auto j) { return p.F2 * NL(p.m[i], p.m[j]); });
  return suite;
}

IntegrableConsequences integrable_consequences(const FStructure& s) {
  IntegrableConsequences out;
  if (!nijenhuis_of(s.F).is_zero()) return out;
  out.applicable = true;
  const Projected p(s);
  // alpha F^{K-1} + beta F^{K-2}
  const TensorField11 fk2 = s.F.pow(static_cast<unsigned>(s.K - 2));
  const TensorField11 A = s.alpha * (fk2 * s.F) + s.beta * fk2;
  const auto& c = s.chart;
  auto br = [](const VectorField& x, const VectorField& y) { return lie_bracket(x, y); };
  out.checks.checks.push_back(frame_identity(
      "F[X,Y]=(aF^{K-1}+bF^{K-2})[FX,FY]+l([FX,Y]+[X,FY])", c,
      [&](auto i, auto j) { return s.F * br(p.e[i], p.e[j]); },
      [&](auto i, auto j) {
        return A * br(p.f[i], p.f[j]) + s.l * (br(p.f[i], p.e[j]) + br(p.e[i], p.f[j]));
      }));
  out.checks.checks.push_back(frame_identity(
      "[FX,FY]=l[FX,FY]", c, [&](auto i, auto j) { return br(p.f[i], p.f[j]); },
      [&](auto i, auto j) { return s.l * br(p.f[i], p.f[j]); }));
  out.checks.checks.push_back(frame_identity(
      "m[FX,FY]=0", c, [&](auto i, auto j) { return s.m * br(p.f[i], p.f[j]); },
      [&](auto, auto) { return VectorField::zero(s.dim()); }));
  return out;
}

}  // namespace fstruct
