#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fstruct/expr.hpp"
#include "fstruct/fstructure.hpp"
#include "fstruct/identity.hpp"

namespace fstruct {

/// re + j im over the rational function field.
struct ComplexExpr {
  Expr re;
  Expr im;

  explicit ComplexExpr(std::size_t nvars) : re(nvars), im(nvars) {}
  ComplexExpr(Expr r, Expr i) : re(std::move(r)), im(std::move(i)) {}

  ComplexExpr conj() const { return {re, -im}; }

  friend ComplexExpr operator+(const ComplexExpr& a, const ComplexExpr& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexExpr operator-(const ComplexExpr& a, const ComplexExpr& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexExpr operator*(const ComplexExpr& a, const ComplexExpr& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  /// Throws DivisionByZero when b is zero.
  friend ComplexExpr operator/(const ComplexExpr& a, const ComplexExpr& b);
  friend bool operator==(const ComplexExpr& a, const ComplexExpr& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline bool is_zero(const ComplexExpr& z) { return z.re.is_zero() && z.im.is_zero(); }
std::string to_string(const ComplexExpr& z, std::span<const std::string> names);

/// Components of a complex vector field in the coordinate frame.
using ComplexField = std::vector<ComplexExpr>;

ComplexField complexify(const VectorField& re, const VectorField& im);
ComplexField conjugate(const ComplexField& v);
/// Complex-bilinear extension of the Lie bracket.
ComplexField complex_bracket(const ComplexField& p, const ComplexField& q);
bool is_zero(const ComplexField& v);
std::string to_string(const ComplexField& v, std::span<const std::string> names);

/// Complex subbundle given by an independent basis, together with the real
/// distribution it is meant to complexify.
struct ComplexFrameBundle {
  std::vector<ComplexField> basis;
  std::vector<VectorField> real_span;

  std::size_t complex_dim() const noexcept { return basis.size(); }
};

/// H = {X - j Fhat X : X in D_l}: the generators e - j Fhat e over the basis
/// of D_l, reduced to an independent subset. Throws std::invalid_argument
/// when Fhat fails verify_fhat (which includes r odd).
ComplexFrameBundle build_H(const FStructure& s, const TensorField11& fhat);
ComplexFrameBundle conjugate(const ComplexFrameBundle& h);

/// H and its conjugate are independent (rank 2 dim H), and the real and
/// imaginary parts of the basis span `real_span`.
bool check_disjointness(const ComplexFrameBundle& h);

/// Every bracket of basis fields lies in the complex span of the basis.
bool check_involutive(const ComplexFrameBundle& h);

/// Fhat P = j P for each generator of H.
bool check_eigenbundle(const ComplexFrameBundle& h, const TensorField11& fhat);

/// On pairs of D_l basis fields:
///   l([Fhat X, Y] + [X, Fhat Y]) = [Fhat X, Y] + [X, Fhat Y]
///   l[Fhat X, Fhat Y] = [Fhat X, Fhat Y]
/// Both follow when D_l is involutive (every bracket stays in D_l) and can
/// fail otherwise.
IdentitySuite fhat_bracket_suite(const FStructure& s, const TensorField11& fhat);

struct CrReport {
  IdentitySuite fhat_checks;
  ComplexFrameBundle H;
  bool fhat_integrable = false;  // N_Fhat vanishes on the frame
  bool disjoint = false;
  bool involutive = false;
  bool eigenbundle = false;
  /// False only if N_Fhat = 0 and yet H is not involutive.
  bool implication_ok = true;

  bool is_cr() const { return disjoint && involutive; }
};

/// Throws std::invalid_argument when Fhat fails verify_fhat.
CrReport check_cr(const FStructure& s, const TensorField11& fhat);

}  // namespace fstruct
