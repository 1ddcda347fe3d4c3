#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fstruct/chart.hpp"
#include "fstruct/identity.hpp"
#include "fstruct/rational.hpp"
#include "fstruct/tensor.hpp"

namespace fstruct {

/// A nonzero F with alpha F^{K+1} + beta F^K + F = 0, together with its
/// complementary projectors l = -(alpha F^K + beta F^{K-1}) and m = I - l.
struct FStructure {
  Chart chart;
  TensorField11 F;
  Rational alpha;
  Rational beta;
  int K = 3;
  TensorField11 l;
  TensorField11 m;
  std::size_t rank = 0;  // generic rank of F

  std::size_t dim() const noexcept { return chart.dim(); }
};

/// alpha F^{K+1} + beta F^K + F. Throws StructureError for K < 3.
TensorField11 structure_residual(const TensorField11& F, const Rational& alpha,
                                 const Rational& beta, int K);
bool verify_structure_equation(const TensorField11& F, const Rational& alpha,
                               const Rational& beta, int K);

/// (l, m) with l + m = I.
std::pair<TensorField11, TensorField11> build_projectors(const TensorField11& F,
                                                         const Rational& alpha,
                                                         const Rational& beta, int K);

/// Verifies the structure equation and assembles the projectors and rank.
/// Throws StructureError (zero F, K < 3, or a nonzero residual entry, which
/// is named in the message) and DimensionMismatch (F not on `chart`).
FStructure make_structure(Chart chart, TensorField11 F, const Rational& alpha,
                          const Rational& beta, int K);

/// l+m=I, l^2=l, m^2=m, lF=Fl=F, mF=Fm=0, lm=ml=0.
IdentitySuite check_projector_identities(const FStructure& s);

/// Rank over the rational-function field.
std::size_t generic_rank(const TensorField11& t);

struct RankReport {
  std::size_t rank = 0;
  std::vector<std::size_t> sample_ranks;  // numeric rank at each sample point
  bool consistent = true;                 // every sample agreed
  std::string warning;                    // empty unless sampling failed or disagreed
};

/// generic_rank cross-validated by exact numeric rank at `samples` admissible
/// points drawn with a fixed seed.
RankReport checked_rank(const TensorField11& t, const Chart& chart, std::size_t samples = 3,
                        std::uint64_t seed = 0x5eed);

/// Image of a projector: a maximal independent subset of its columns.
struct Distribution {
  std::vector<VectorField> basis;
  std::vector<std::size_t> columns;  // which projector columns were kept

  std::size_t dim() const noexcept { return basis.size(); }
};

/// Throws std::invalid_argument unless P^2 = P.
Distribution distribution_of(const TensorField11& projector);

/// Image/kernel relations between F, l and m and the dimension split
/// dim D_l = r, dim D_m = n - r.
IdentitySuite check_decomposition(const FStructure& s);

/// Checks a supplied square root Fhat of -l: Fhat^2 = -l, l Fhat = Fhat l =
/// Fhat, m Fhat = Fhat m = 0, ker Fhat = ker l, and r even.
IdentitySuite verify_fhat(const FStructure& s, const TensorField11& fhat);

/// Shared helper: a named check that `residual` vanishes entrywise.
IdentityCheck matrix_vanishes(std::string name, const TensorField11& residual, const Chart& chart);

}  // namespace fstruct
