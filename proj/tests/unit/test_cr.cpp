#include <doctest.h>

#include "fstruct/cr.hpp"
#include "fstruct/errors.hpp"
#include "fstruct/manifest.hpp"
#include "support/random_expr.hpp"
#include "support/structures.hpp"

using namespace fstruct;
using testing::example;
using testing::twisted;

namespace {

ComplexExpr cx(const Chart& c, const char* re, const char* im) {
  return {c.parse_expr(re), c.parse_expr(im)};
}

}  // namespace

TEST_CASE("complex arithmetic") {
  Chart c({"x", "y"});
  testing::RandomExprs gen(2, 5);
  for (int trial = 0; trial < 25; ++trial) {
    ComplexExpr a(gen.expr(2), gen.expr(2));
    ComplexExpr b(gen.expr(2), gen.expr(2));
    if (is_zero(b)) continue;
    CHECK((a / b) * b == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a - a == ComplexExpr(2));
  }
  // j * j = -1, 1 / j = -j.
  auto j = cx(c, "0", "1");
  CHECK(j * j == cx(c, "-1", "0"));
  CHECK(cx(c, "1", "0") / j == cx(c, "0", "-1"));
  // (x + j) / (x - j) = (x^2 - 1 + 2jx) / (x^2 + 1)
  CHECK(cx(c, "x", "1") / cx(c, "x", "-1") == cx(c, "(x^2 - 1)/(x^2 + 1)", "2*x/(x^2 + 1)"));
  CHECK_THROWS_AS(j / ComplexExpr(2), DivisionByZero);
  CHECK(to_string(cx(c, "x", "1"), c.vars()) == "x + j");
  CHECK(to_string(cx(c, "0", "x + 1"), c.vars()) == "j*(x + 1)");
  CHECK(to_string(cx(c, "y", "0"), c.vars()) == "y");
}

TEST_CASE("complex bracket extends the real bracket") {
  testing::RandomExprs gen(3, 11);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = gen.field(2);
    auto b = gen.field(2);
    auto p = gen.field(2);
    auto q = gen.field(2);
    // [a + jb, p + jq] = [a,p] - [b,q] + j([a,q] + [b,p])
    auto lhs = complex_bracket(complexify(a, b), complexify(p, q));
    auto rhs = complexify(lie_bracket(a, p) - lie_bracket(b, q), lie_bracket(a, q) + lie_bracket(b, p));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("H for the example with a supplied Fhat") {
  auto loaded = load(builtin_example(2));
  const auto& s = loaded.structure;
  const auto& fhat = *loaded.fhat;
  auto h = build_H(s, fhat);
  REQUIRE(h.complex_dim() == 1);
  // e_1 - j Fhat e_1 = (1, 0) - j(0, -1) = (1, j)
  CHECK(h.basis[0] == ComplexField{cx(s.chart, "1", "0"), cx(s.chart, "0", "1")});
  CHECK(to_string(h.basis[0], s.chart.vars()) == "(1, j)");
  CHECK(check_disjointness(h));
  CHECK(check_involutive(h));
  CHECK(check_involutive(conjugate(h)));
  CHECK(check_eigenbundle(h, fhat));
  auto r = check_cr(s, fhat);
  CHECK(r.fhat_integrable);
  CHECK(r.is_cr());
  CHECK(r.implication_ok);
  CHECK(r.fhat_checks.all_passed());

  // a = 1, b = 1 member of the corrected square-root family.
  auto alt = parse_tensor(s.chart, {{"1", "1"}, {"-2", "-1"}});
  auto h2 = build_H(s, alt);
  CHECK(h2.complex_dim() == 1);
  CHECK(check_disjointness(h2));
  CHECK(check_eigenbundle(h2, alt));
  CHECK(check_cr(s, alt).is_cr());

  CHECK_THROWS_AS(build_H(s, parse_tensor(s.chart, {{"0", "1"}, {"1", "0"}})), std::invalid_argument);
}

TEST_CASE("empty H when l = 0") {
  Chart c({"x", "y"});
  FStructure s{c, TensorField11::zero(2), 1, 1, 3, TensorField11::zero(2), TensorField11::identity(2), 0};
  auto h = build_H(s, TensorField11::zero(2));
  CHECK(h.complex_dim() == 0);
  CHECK(check_disjointness(h));
  CHECK(check_involutive(h));
  CHECK(check_cr(s, TensorField11::zero(2)).is_cr());
}

TEST_CASE("disjointness rejects real fields") {
  Chart c({"x", "y"});
  ComplexFrameBundle bad;
  bad.basis = {{cx(c, "1", "0"), cx(c, "x", "0")}};
  bad.real_span = {VectorField::unit(2, 0), VectorField::unit(2, 1)};
  CHECK_FALSE(check_disjointness(bad));
  // Independent from its conjugate, but the real parts miss dy.
  ComplexFrameBundle narrow;
  narrow.basis = {{cx(c, "1", "1"), cx(c, "0", "0")}};
  narrow.real_span = {VectorField::unit(2, 0), VectorField::unit(2, 1)};
  CHECK_FALSE(check_disjointness(narrow));
}

TEST_CASE("non-involutive complex span") {
  Chart c({"x", "y", "z"});
  ComplexFrameBundle h;
  // P = (1, 0, j y), Q = (0, 1, 0): [P, Q] = (0, 0, -j), outside span{P, Q}.
  h.basis = {{cx(c, "1", "0"), cx(c, "0", "0"), cx(c, "0", "y")},
             {cx(c, "0", "0"), cx(c, "1", "0"), cx(c, "0", "0")}};
  CHECK(complex_bracket(h.basis[0], h.basis[1]) ==
        ComplexField{cx(c, "0", "0"), cx(c, "0", "0"), cx(c, "0", "-1")});
  CHECK_FALSE(check_involutive(h));
  CHECK_FALSE(check_involutive(conjugate(h)));
  // P = (1, 0, 0), Q = (x, 1, 0): [P, Q] = P.
  h.basis[0] = {cx(c, "1", "0"), cx(c, "0", "0"), cx(c, "0", "0")};
  h.basis[1] = {cx(c, "x", "0"), cx(c, "1", "0"), cx(c, "0", "0")};
  CHECK(check_involutive(h));
}

TEST_CASE("Fhat bracket identities need an involutive D_l") {
  for (int id = 1; id <= 4; ++id) {
    CAPTURE(id);
    auto loaded = load(builtin_example(id));
    if (!loaded.fhat) continue;
    CHECK(fhat_bracket_suite(loaded.structure, *loaded.fhat).all_passed());
  }
  // For (0, 1, 3), l = -F^2, so F itself is a valid Fhat.
  auto s = twisted();
  CHECK(verify_fhat(s, s.F).all_passed());
  auto suite = fhat_bracket_suite(s, s.F);
  CHECK_FALSE(suite.all_passed());
  auto r = check_cr(s, s.F);
  CHECK(r.disjoint);
  CHECK(r.eigenbundle);
  // H is one-dimensional, hence involutive, whatever N_Fhat is.
  CHECK(r.H.complex_dim() == 1);
  CHECK(r.involutive);
  CHECK(r.implication_ok);
}
