#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fstruct/chart.hpp"
#include "fstruct/fstructure.hpp"
#include "fstruct/identity.hpp"
#include "fstruct/tensor.hpp"

namespace fstruct {

/// Antisymmetric bilinear map evaluated on the coordinate frame: entries are
/// stored for i < j; (i, i) is zero and (j, i) = -(i, j).
class FrameTable {
 public:
  FrameTable() = default;
  /// Fills every i < j entry from `value(i, j)`.
  FrameTable(std::size_t n, const std::function<VectorField(std::size_t, std::size_t)>& value);

  std::size_t dim() const noexcept { return n_; }
  VectorField at(std::size_t i, std::size_t j) const;

  bool is_zero() const noexcept { return !first_nonzero().has_value(); }
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

  friend bool operator==(const FrameTable& a, const FrameTable& b) {
    return a.n_ == b.n_ && a.upper_ == b.upper_;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::vector<VectorField> upper_;
};

/// N_T(X,Y) = [TX,TY] - T[TX,Y] - T[X,TY] + T^2[X,Y], all four terms.
VectorField nijenhuis_apply(const TensorField11& t, const VectorField& x, const VectorField& y);

/// N_T on every frame pair.
FrameTable nijenhuis_of(const TensorField11& t);

/// The unconditional Nijenhuis identities relating N_F, N_l, N_m, the
/// projectors and brackets of projected frame fields, checked on all frame
/// pairs:
///   (a) N_F(mX,mY) = F^2[mX,mY]
///   (b) mN_F(X,Y) = m[FX,FY]
///   (c) mN_F(FX,FY) = m[F^2X,F^2Y]
///   (d) mN_F(lX,lY) = m[FX,FY]
///   (e) N_l(X,Y) = N_m(X,Y) = m[lX,lY] + l[mX,mY]
///   (f) N_l(lX,lY) = m[lX,lY]
///   (g) N_l(mX,mY) = l[mX,mY]
///   (h) N_l(X,Y) = N_l(lX,lY) + N_l(mX,mY)
///   (i) mN_F(X,Y) = N_l(FX,FY)
///   (j) N_l(lX,mY) = N_l(mX,lY) = 0
///   (k) N_F(mX,mY) = F^2 N_l(mX,mY)
IdentitySuite nijenhuis_identity_suite(const FStructure& s);

/// What vanishing N_F forces. `applicable` is false when N_F is nonzero on
/// the frame, in which case `checks` is empty. Otherwise, on all frame pairs:
///   F[X,Y] = (alpha F^{K-1} + beta F^{K-2})[FX,FY] + l([FX,Y] + [X,FY]),
///   [FX,FY] = l[FX,FY],  m[FX,FY] = 0.
struct IntegrableConsequences {
  bool applicable = false;
  IdentitySuite checks;
};
IntegrableConsequences integrable_consequences(const FStructure& s);

/// Named check that lhs(i,j) - rhs(i,j) vanishes for every frame pair i < j.
IdentityCheck frame_identity(std::string name, const Chart& chart,
                             const std::function<VectorField(std::size_t, std::size_t)>& lhs,
                             const std::function<VectorField(std::size_t, std::size_t)>& rhs);

}  // namespace fstruct
