#include "fstruct/generator.hpp"

#include <stdexcept>

#include "fstruct/errors.hpp"

namespace fstruct {

std::string to_string(Conjugation c) {
  switch (c) {
    case Conjugation::kNone:
      return "none";
    case Conjugation::kConstant:
      return "constant";
    case Conjugation::kUnimodular:
      return "unimodular";
  }
  return "none";
}

Conjugation parse_conjugation(const std::string& s) {
  if (s == "none") return Conjugation::kNone;
  if (s == "constant") return Conjugation::kConstant;
  if (s == "unimodular") return Conjugation::kUnimodular;
  throw std::invalid_argument("unknown conjugation '" + s + "'");
}

std::size_t block_size(const Rational& alpha, const Rational& beta, int K) {
  if (K < 3) throw std::invalid_argument("K must be at least 3, got " + std::to_string(K));
  if (alpha != 0) return static_cast<std::size_t>(K);
  if (beta != 0) return static_cast<std::size_t>(K - 1);
  throw std::invalid_argument("alpha = beta = 0 leaves q(t) = 1 with no companion block");
}

std::vector<std::vector<Rational>> companion(const std::vector<Rational>& coeffs) {
  const std::size_t d = coeffs.size();
  std::vector<std::vector<Rational>> c(d, std::vector<Rational>(d, 0));
  for (std::size_t i = 1; i < d; ++i) c[i][i - 1] = 1;
  for (std::size_t i = 0; i < d; ++i) c[i][d - 1] = -coeffs[i];
  return c;
}

std::vector<std::string> default_vars(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "t", "u", "v"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(n <= 6 ? names[i] : "x" + std::to_string(i + 1));
  return out;
}

namespace {

// Low-order coefficients of q made monic.
std::vector<Rational> monic_coefficients(const Rational& alpha, const Rational& beta, int K) {
  const std::size_t d = block_size(alpha, beta, K);
  const Rational lead = alpha != 0 ? alpha : beta;
  std::vector<Rational> c(d, 0);
  c[0] = Rational(1) / lead;
  if (alpha != 0) c[d - 1] = beta / alpha;
  for (auto& v : c) v.canonicalize();
  return c;
}

TensorField11 shear(const Chart& chart, std::size_t row, std::size_t col, const Expr& c) {
  if (row == col || row >= chart.dim() || col >= chart.dim()) {
    throw std::invalid_argument("shear needs distinct in-range row and column");
  }
  auto t = TensorField11::identity(chart.dim());
  t(row, col) = c;
  return t;
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

GeneratedStructure generate(const GeneratorSpec& spec) {
  const std::size_t d = block_size(spec.alpha, spec.beta, spec.K);
  if (spec.n == 0 || spec.kernel_dim >= spec.n || (spec.n - spec.kernel_dim) % d != 0) {
    throw std::invalid_argument("n = " + std::to_string(spec.n) + " with kernel " +
                                std::to_string(spec.kernel_dim) +
                                " is not a positive number of companion blocks of size " +
                                std::to_string(d));
  }
  const std::size_t blocks = (spec.n - spec.kernel_dim) / d;
  const std::size_t r = blocks * d;
  Chart chart(default_vars(spec.n));
  const std::size_t n = spec.n;

  const auto c = companion(monic_coefficients(spec.alpha, spec.beta, spec.K));
  auto base = TensorField11::zero(n);
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (c[i][j] != 0) base(b * d + i, b * d + j) = chart.constant(c[i][j]);
      }
    }
  }

  std::mt19937_64 rng(spec.seed);
  auto p = TensorField11::identity(n);
  auto p_inv = TensorField11::identity(n);
  switch (spec.conjugation) {
    case Conjugation::kNone:
      break;
    case Conjugation::kConstant:
      for (;;) {
        std::vector<std::vector<Expr>> rows(n);
        for (auto& row : rows) {
          for (std::size_t j = 0; j < n; ++j) row.push_back(chart.constant(uniform(rng, -2, 2)));
        }
        p = TensorField11(std::move(rows));
        if (auto inv = inverse(p)) {
          p_inv = std::move(*inv);
          break;
        }
      }
      break;
    case Conjugation::kUnimodular: {
      std::vector<std::pair<std::pair<std::size_t, std::size_t>, Expr>> factors;
      if (!spec.shears.empty()) {
        for (const auto& s : spec.shears) factors.push_back({{s.row, s.col}, chart.parse_expr(s.coefficient)});
      } else if (n > 1) {
        for (std::size_t k = 0; k < spec.shear_count; ++k) {
          const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
          auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
          if (j >= i) ++j;
          int a = uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1);
          Expr coeff = chart.constant(a) * chart.var(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1))) +
                       chart.constant(uniform(rng, -1, 1));
          factors.push_back({{i, j}, coeff});
        }
      }
      for (const auto& [ij, coeff] : factors) p = p * shear(chart, ij.first, ij.second, coeff);
      // (E_1 ... E_k)^-1 = E_k^-1 ... E_1^-1, E(c)^-1 = E(-c)
      for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        p_inv = p_inv * shear(chart, it->first.first, it->first.second, -it->second);
      }
      break;
    }
  }

  TensorField11 F = p * base * p_inv;
  std::optional<TensorField11> fhat;
  if (r % 2 == 0) {
    auto j = TensorField11::zero(n);
    for (std::size_t k = 0; k + 1 < r; k += 2) {
      j(k, k + 1) = chart.constant(-1);
      j(k + 1, k) = chart.constant(1);
    }
    fhat = p * j * p_inv;
  }
  FStructure s = make_structure(std::move(chart), std::move(F), spec.alpha, spec.beta, spec.K);
  return GeneratedStructure{std::move(s), std::move(fhat), std::move(p), std::move(p_inv), blocks};
}

GeneratorSpec non_involutive_spec() {
  GeneratorSpec spec;
  spec.n = 3;
  spec.K = 3;
  spec.alpha = 0;
  spec.beta = 1;
  spec.kernel_dim = 1;
  spec.conjugation = Conjugation::kUnimodular;
  spec.shears = {{1, 2, "x"}, {2, 1, "1"}};
  return spec;
}

GeneratorSpec random_spec(std::mt19937_64& rng, const FuzzOptions& options) {
  static const int pool[][2] = {{1, -2}, {1, 1}, {-1, 1}, {1, 0}, {0, 1}, {0, -1}, {2, 3}, {-1, -2}, {0, 2}};
  GeneratorSpec spec;
  for (;;) {
    spec.K = options.Ks[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.Ks.size()) - 1))];
    const auto& ab = pool[uniform(rng, 0, static_cast<int>(std::size(pool)) - 1)];
    spec.alpha = ab[0];
    spec.beta = ab[1];
    if (block_size(spec.alpha, spec.beta, spec.K) <= options.max_n) break;
  }
  const std::size_t d = block_size(spec.alpha, spec.beta, spec.K);
  spec.n = static_cast<std::size_t>(uniform(rng, static_cast<int>(d), static_cast<int>(options.max_n)));
  const std::size_t blocks = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(spec.n / d)));
  spec.kernel_dim = spec.n - blocks * d;
  const int kinds = options.position_dependent ? 2 : 1;
  switch (uniform(rng, 0, kinds)) {
    case 0:
      spec.conjugation = Conjugation::kNone;
      break;
    case 1:
      spec.conjugation = Conjugation::kConstant;
      break;
    default:
      spec.conjugation = Conjugation::kUnimodular;
      spec.shear_count = static_cast<std::size_t>(uniform(rng, 1, 3));
      break;
  }
  spec.seed = rng();
  return spec;
}

}  // namespace fstruct
