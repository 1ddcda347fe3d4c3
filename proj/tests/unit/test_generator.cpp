#include <doctest.h>

#include "fstruct/generator.hpp"
#include "fstruct/integrability.hpp"
#include "fstruct/nijenhuis.hpp"
#include "support/structures.hpp"

using namespace fstruct;

namespace {

// Direct product of Rational matrices, independent of TensorField11.
using RMat = std::vector<std::vector<Rational>>;
RMat mul(const RMat& a, const RMat& b) {
  RMat c(a.size(), std::vector<Rational>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

TEST_CASE("companion matrix annihilates its polynomial") {
  // t^3 + 2t^2 - t + 5
  std::vector<Rational> coeffs{5, -1, 2};
  auto c = companion(coeffs);
  RMat id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto c2 = mul(c, c);
  auto c3 = mul(c2, c);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rational v = c3[i][j] + 2 * c2[i][j] - c[i][j] + 5 * id[i][j];
      CHECK(v == 0);
    }
  }
  CHECK(block_size(1, -2, 3) == 3);
  CHECK(block_size(0, 1, 3) == 2);
  CHECK(block_size(0, -1, 5) == 4);
  CHECK_THROWS_AS(block_size(0, 0, 3), std::invalid_argument);
}

TEST_CASE("generated instances satisfy their equation") {
  SUBCASE("one 2-block and a kernel for F^3 + F = 0") {
    GeneratorSpec spec;
    spec.n = 3;
    spec.kernel_dim = 1;
    auto g = generate(spec);
    CHECK(g.blocks == 1);
    CHECK(g.structure.rank == 2);
    CHECK(g.structure.F.is_constant());
    REQUIRE(g.fhat.has_value());
    CHECK(verify_fhat(g.structure, *g.fhat).all_passed());
  }
  SUBCASE("constant conjugation, seed 7") {
    GeneratorSpec spec;
    spec.n = 4;
    spec.K = 3;
    spec.alpha = 1;
    spec.beta = -2;
    spec.kernel_dim = 1;
    spec.conjugation = Conjugation::kConstant;
    spec.seed = 7;
    auto g = generate(spec);
    CHECK(g.structure.rank == 3);
    CHECK(generic_rank(g.structure.l) == 3);
    CHECK(g.P * g.P_inverse == TensorField11::identity(4));
    CHECK_FALSE(g.fhat.has_value());
  }
  SUBCASE("unimodular conjugation in x") {
    GeneratorSpec spec;
    spec.n = 6;
    spec.K = 5;
    spec.alpha = 1;
    spec.beta = 1;
    spec.kernel_dim = 1;
    spec.conjugation = Conjugation::kUnimodular;
    spec.shears = {{0, 1, "x"}, {5, 2, "x^2 + 1"}};
    auto g = generate(spec);
    CHECK_FALSE(g.structure.F.is_constant());
    CHECK(g.P * g.P_inverse == TensorField11::identity(6));
    CHECK(g.structure.rank == 5);
    CHECK(check_projector_identities(g.structure).all_passed());
    CHECK(nijenhuis_identity_suite(g.structure).all_passed());
  }
  CHECK_THROWS_AS(generate(GeneratorSpec{4, 3, 1, -2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate(GeneratorSpec{3, 3, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(generate(GeneratorSpec{3, 3, 0, 1, 3}), std::invalid_argument);
}

TEST_CASE("same spec and seed reproduce the instance") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 10; ++k) {
    auto spec = random_spec(rng);
    auto a = generate(spec);
    auto b = generate(spec);
    CHECK(a.structure.F == b.structure.F);
  }
}

TEST_CASE("negative control has non-involutive D_l") {
  auto g = generate(non_involutive_spec());
  CHECK(g.structure.F == testing::twisted().F);
  auto dl = distribution_of(g.structure.l);
  CHECK_FALSE(frobenius_crosscheck(dl));
  auto d = decide_Dl(g.structure);
  CHECK_FALSE(d.verdict);
  CHECK(d.consistent);
}

TEST_CASE("random specs stay within bounds") {
  std::mt19937_64 rng(1);
  int dependent = 0;
  for (int k = 0; k < 200; ++k) {
    auto spec = random_spec(rng);
    CHECK(spec.n <= 6);
    CHECK(spec.K >= 3);
    CHECK(spec.K <= 5);
    auto d = block_size(spec.alpha, spec.beta, spec.K);
    CHECK((spec.n - spec.kernel_dim) % d == 0);
    CHECK(spec.n > spec.kernel_dim);
    dependent += spec.conjugation == Conjugation::kUnimodular;
  }
  CHECK(dependent > 0);
  std::mt19937_64 rng2(1);
  for (int k = 0; k < 50; ++k) {
    CHECK(random_spec(rng2, {6, {3, 4, 5}, false}).conjugation != Conjugation::kUnimodular);
  }
}

TEST_CASE("generated fuzz instances pass the identity suites") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 30; ++k) {
    auto spec = random_spec(rng);
    CAPTURE(k);
    CAPTURE(spec.n);
    CAPTURE(spec.K);
    auto g = generate(spec);
    const auto& s = g.structure;
    CHECK(s.rank == g.blocks * block_size(spec.alpha, spec.beta, spec.K));
    CHECK(check_projector_identities(s).all_passed());
    CHECK(check_decomposition(s).all_passed());
    CHECK(nijenhuis_identity_suite(s).all_passed());
    if (g.fhat) CHECK(verify_fhat(s, *g.fhat).all_passed());
  }
}
