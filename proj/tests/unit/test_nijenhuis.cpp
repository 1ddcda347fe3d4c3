#include <doctest.h>

#include "fstruct/errors.hpp"
#include "fstruct/manifest.hpp"
#include "fstruct/nijenhuis.hpp"
#include "support/random_expr.hpp"
#include "support/structures.hpp"

using namespace fstruct;

using testing::example;
using testing::twisted;

TEST_CASE("Nijenhuis tensor of the worked examples") {
  auto s1 = example(1);
  CHECK(nijenhuis_of(s1.F).is_zero());

  auto s4 = example(4);
  auto n4 = nijenhuis_of(s4.F);
  // Expanded by hand: N_F(dz, dt) = (1/x) dy.
  auto expected = s4.chart.parse_expr("1/x") * VectorField::unit(4, 1);
  CHECK(n4.at(2, 3) == expected);
  CHECK(n4.at(3, 2) == -expected);
  CHECK(to_string(n4.at(2, 3), s4.chart.vars()) == "(1/x)*∂y");
  CHECK_FALSE(n4.is_zero());
  // Remaining entries, checked against an independent symbolic expansion.
  auto v = [&](const char* a, const char* b, const char* c, const char* d) {
    return VectorField({s4.chart.parse_expr(a), s4.chart.parse_expr(b), s4.chart.parse_expr(c),
                        s4.chart.parse_expr(d)});
  };
  CHECK(n4.at(0, 1) == v("0", "1/x", "1", "0"));
  CHECK(n4.at(0, 2) == v("0", "0", "-1/x", "0"));
  CHECK(n4.at(0, 3).is_zero());
  CHECK(n4.at(1, 2).is_zero());
  CHECK(n4.at(1, 3) == v("0", "0", "x", "0"));

  // Constant tensors have vanishing torsion.
  CHECK(nijenhuis_of(example(2).F).is_zero());
  Chart c({"x", "y", "z"});
  CHECK(nijenhuis_of(parse_tensor(c, {{"1", "2", "3"}, {"0", "-1", "4"}, {"5", "0", "2"}})).is_zero());

  CHECK_THROWS_AS(nijenhuis_apply(s1.F, VectorField::unit(3, 0), VectorField::unit(2, 0)),
                  DimensionMismatch);
}

TEST_CASE("Nijenhuis tensor is antisymmetric and function-linear") {
  Chart c({"x", "y", "z"});
  testing::RandomExprs gen(3, 17);
  for (int trial = 0; trial < 12; ++trial) {
    CAPTURE(trial);
    std::vector<std::vector<Expr>> rows(3);
    for (auto& r : rows) {
      for (int k = 0; k < 3; ++k) r.push_back(gen.polynomial(2));
    }
    TensorField11 t(std::move(rows));
    auto x = gen.field(2);
    auto y = gen.field(2);
    auto f = gen.polynomial(2);
    auto nxy = nijenhuis_apply(t, x, y);
    CHECK(nxy == -nijenhuis_apply(t, y, x));
    CHECK(nijenhuis_apply(t, f * x, y) == f * nxy);
    CHECK(nijenhuis_apply(t, x, f * y) == f * nxy);
    CHECK(nijenhuis_apply(t, x, x).is_zero());
  }
}

TEST_CASE("projector identities for the Nijenhuis tensors") {
  for (int id = 1; id <= 4; ++id) {
    CAPTURE(id);
    auto suite = nijenhuis_identity_suite(example(id));
    CHECK(suite.checks.size() == 11);
    for (const auto& c : suite.checks) {
      CAPTURE(c.name);
      CAPTURE(c.residual);
      CHECK(c.passed);
    }
  }
  auto t = twisted();
  CHECK_FALSE(nijenhuis_of(t.l).is_zero());
  auto suite = nijenhuis_identity_suite(t);
  for (const auto& c : suite.checks) {
    CAPTURE(c.name);
    CAPTURE(c.residual);
    CHECK(c.passed);
  }
}

TEST_CASE("consequences of vanishing N_F") {
  auto c1 = integrable_consequences(example(1));
  CHECK(c1.applicable);
  CHECK(c1.checks.checks.size() == 3);
  CHECK(c1.checks.all_passed());
  auto c3 = integrable_consequences(example(3));
  CHECK(c3.applicable);
  CHECK(c3.checks.all_passed());
  auto c4 = integrable_consequences(example(4));
  CHECK_FALSE(c4.applicable);
  CHECK(c4.checks.checks.empty());
  CHECK_FALSE(integrable_consequences(twisted()).applicable);
}

TEST_CASE("frame identity reports a witness") {
  Chart c({"x", "y"});
  auto check = frame_identity(
      "demo", c, [&](auto, auto) { return VectorField::unit(2, 0); },
      [&](auto, auto) { return VectorField::zero(2); });
  CHECK_FALSE(check.passed);
  REQUIRE(check.witness.has_value());
  CHECK(check.witness->first == 0);
  CHECK(check.witness->second == 1);
  CHECK(check.residual == "∂x");
}
