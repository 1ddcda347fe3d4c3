#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fstruct/fstructure.hpp"

namespace fstruct {

enum class Conjugation { kNone, kConstant, kUnimodular };

std::string to_string(Conjugation c);
/// "none", "constant" or "unimodular"; throws std::invalid_argument.
Conjugation parse_conjugation(const std::string& s);

/// Elementary matrix I + c e_row e_col^T (row != col), c a polynomial in
/// the chart variables.
struct Shear {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string coefficient;
};

/// F = P blockdiag(C_q, ..., C_q, 0_kernel) P^-1 where C_q is the companion
/// matrix of q(t) = alpha t^K + beta t^{K-1} + 1 made monic. Block size is
/// deg q: K when alpha != 0, K - 1 when alpha = 0.
struct GeneratorSpec {
  std::size_t n = 3;
  int K = 3;
  Rational alpha = 0;
  Rational beta = 1;
  std::size_t kernel_dim = 0;
  Conjugation conjugation = Conjugation::kNone;
  std::uint64_t seed = 0;
  /// Used with kUnimodular when non-empty; P is their product in order.
  /// Otherwise `shear_count` random shears with degree <= 1 coefficients.
  std::vector<Shear> shears;
  std::size_t shear_count = 2;
};

/// Companion block size for (alpha, beta, K). Throws std::invalid_argument
/// when alpha = beta = 0.
std::size_t block_size(const Rational& alpha, const Rational& beta, int K);

/// Companion matrix of the monic polynomial with the given low-order
/// coefficients c_0..c_{d-1}: t^d + c_{d-1} t^{d-1} + ... + c_0.
std::vector<std::vector<Rational>> companion(const std::vector<Rational>& coeffs);

struct GeneratedStructure {
  FStructure structure;
  /// P blockdiag(J, ..., J, 0) P^-1 when rank F is even.
  std::optional<TensorField11> fhat;
  TensorField11 P;
  TensorField11 P_inverse;
  std::size_t blocks = 0;
};

/// Default chart variables: x, y, z, t, u, v, then x1..xn beyond six.
std::vector<std::string> default_vars(std::size_t n);

/// Throws std::invalid_argument for K < 3, a degenerate polynomial, or when
/// n - kernel_dim is not a positive multiple of the block size. The result
/// is re-verified (StructureError if that ever fails).
GeneratedStructure generate(const GeneratorSpec& spec);

/// n = 3, (0, 1, 3), P = E_23(x) E_32(1): D_l = span{dx, (1+x)dy + dz} is
/// not involutive.
GeneratorSpec non_involutive_spec();

struct FuzzOptions {
  std::size_t max_n = 6;
  std::vector<int> Ks = {3, 4, 5};
  bool position_dependent = true;  // mix in unimodular conjugations
};

/// Random feasible spec drawn from `rng`: K from `Ks`, (alpha, beta) from a
/// fixed pool of small integers, n and the kernel dimension random.
GeneratorSpec random_spec(std::mt19937_64& rng, const FuzzOptions& options = {});

}  // namespace fstruct
