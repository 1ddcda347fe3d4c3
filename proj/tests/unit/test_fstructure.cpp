#include <doctest.h>

#include <algorithm>
#include <array>

#include "fstruct/errors.hpp"
#include "fstruct/fstructure.hpp"
#include "fstruct/manifest.hpp"

using namespace fstruct;

namespace {

FStructure example(int id) { return load(builtin_example(id)).structure; }

TensorField11 diag(const Chart& c, std::initializer_list<int> d) {
  auto t = TensorField11::zero(c.dim());
  std::size_t i = 0;
  for (int v : d) {
    t(i, i) = c.constant(v);
    ++i;
  }
  return t;
}

// Direct 2x2 product, independent of TensorField11::operator*.
std::array<Rational, 4> square2(std::array<Rational, 4> a) {
  return {a[0] * a[0] + a[1] * a[2], a[0] * a[1] + a[1] * a[3], a[2] * a[0] + a[3] * a[2],
          a[2] * a[1] + a[3] * a[3]};
}

}  // namespace

TEST_CASE("structure equation") {
  Chart c1({"x", "y"});
  auto F1 = parse_tensor(c1, {{"-1", "y"}, {"-1/y", "2"}});
  CHECK(verify_structure_equation(F1, 1, -2, 3));
  auto I = TensorField11::identity(2);
  CHECK(verify_structure_equation(I, 1, -2, 3));
  CHECK_FALSE(verify_structure_equation(I, 1, 1, 3));
  CHECK(structure_residual(I, 1, 1, 3) == Rational(3) * I);
  CHECK_THROWS_AS(verify_structure_equation(I, 1, -2, 2), StructureError);
  CHECK_THROWS_AS(make_structure(c1, TensorField11::zero(2), 1, -2, 3), StructureError);
  CHECK_THROWS_AS(make_structure(Chart({"x"}), I, 1, -2, 3), DimensionMismatch);
}

TEST_CASE("projectors of the worked examples") {
  auto s1 = example(1);
  CHECK(s1.l == TensorField11::identity(2));
  CHECK(s1.m.is_zero());
  auto s3 = example(3);
  CHECK(s3.l == diag(s3.chart, {1, 0, 1}));
  CHECK(s3.m == diag(s3.chart, {0, 1, 0}));
  auto s4 = example(4);
  CHECK(s4.l == TensorField11::identity(4));
  CHECK(s4.m.is_zero());
}

TEST_CASE("projector identities and decomposition") {
  for (int id = 1; id <= 4; ++id) {
    CAPTURE(id);
    auto s = example(id);
    auto suite = check_projector_identities(s);
    CHECK(suite.checks.size() == 6);
    CHECK(suite.all_passed());
    CHECK(check_decomposition(s).all_passed());
  }
}

TEST_CASE("generic rank") {
  CHECK(example(3).rank == 2);
  CHECK(example(1).rank == 2);
  CHECK(example(4).rank == 4);
  CHECK(generic_rank(TensorField11::identity(4)) == 4);
  CHECK(generic_rank(TensorField11::zero(3)) == 0);

  Chart c({"x", "y"});
  // Rank 2 generically, rank 1 on x = y.
  auto t = parse_tensor(c, {{"x", "y"}, {"1", "1"}});
  int warned = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto report = checked_rank(t, c, 3, seed);
    CHECK(report.rank == 2);
    CHECK(report.sample_ranks.size() == 3);
    bool drop = std::count(report.sample_ranks.begin(), report.sample_ranks.end(), 1) > 0;
    CHECK(report.consistent == !drop);
    CHECK(report.warning.empty() == !drop);
    warned += drop ? 1 : 0;
  }
  // Small rational samples land on the locus x = y now and then.
  CHECK(warned > 0);

  for (int id = 1; id <= 4; ++id) {
    auto s = example(id);
    auto r = checked_rank(s.F, s.chart);
    CHECK(r.consistent);
    CHECK(r.rank == s.rank);
  }
}

TEST_CASE("distributions") {
  auto s3 = example(3);
  auto dl = distribution_of(s3.l);
  CHECK(dl.dim() == 2);
  CHECK(dl.columns == std::vector<std::size_t>{0, 2});
  CHECK(dl.basis[0] == VectorField::unit(3, 0));
  CHECK(dl.basis[1] == VectorField::unit(3, 2));
  auto dm = distribution_of(s3.m);
  CHECK(dm.dim() == 1);
  CHECK(dm.basis[0] == VectorField::unit(3, 1));
  CHECK(distribution_of(example(1).m).dim() == 0);
  CHECK_THROWS_AS(distribution_of(s3.F), std::invalid_argument);
}

TEST_CASE("Fhat verification") {
  auto s2 = example(2);
  // Oracle: [[0,1],[-1,0]]^2 = -I by direct multiplication.
  auto sq = square2({0, 1, -1, 0});
  CHECK(sq == std::array<Rational, 4>{-1, 0, 0, -1});
  auto j = parse_tensor(s2.chart, {{"0", "1"}, {"-1", "0"}});
  CHECK(verify_fhat(s2, j).all_passed());

  // [[0,1],[1,0]]^2 = +I.
  CHECK(square2({0, 1, 1, 0}) == std::array<Rational, 4>{1, 0, 0, 1});
  auto swap = parse_tensor(s2.chart, {{"0", "1"}, {"1", "0"}});
  auto bad = verify_fhat(s2, swap);
  CHECK_FALSE(bad.find("Fhat^2=-l")->passed);

  // The square-root family with the sign fixed: [[a,b],[-(1+a^2)/b,-a]]^2 = -I.
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, -3}, std::pair{0, 5}}) {
    Rational c = -(1 + Rational(a) * a) / Rational(b);
    CHECK(square2({a, b, c, -a}) == std::array<Rational, 4>{-1, 0, 0, -1});
    auto f = TensorField11::zero(2);
    f(0, 0) = s2.chart.constant(a);
    f(0, 1) = s2.chart.constant(b);
    f(1, 0) = s2.chart.constant(c);
    f(1, 1) = s2.chart.constant(-a);
    CHECK(verify_fhat(s2, f).all_passed());
  }
  // The family as printed squares to (1 + 2a^2) I.
  CHECK(square2({1, 1, 2, -1}) == std::array<Rational, 4>{3, 0, 0, 3});

  // Degenerate l = 0 (only reachable with F = 0, so assembled by hand):
  // Fhat = 0 passes Fhat^2 = -l, a nonzero Fhat does not.
  Chart c({"x", "y"});
  FStructure s{c, TensorField11::zero(2), 1, 1, 3, TensorField11::zero(2),
               TensorField11::identity(2), 0};
  CHECK(verify_fhat(s, TensorField11::zero(2)).all_passed());
  CHECK_FALSE(verify_fhat(s, j).find("Fhat^2=-l")->passed);
  CHECK_THROWS_AS(verify_fhat(s2, TensorField11::zero(3)), DimensionMismatch);
}
