#include "fstruct/fstructure.hpp"

#include <stdexcept>

#include "fstruct/errors.hpp"
#include "fstruct/linalg.hpp"

namespace fstruct {

namespace {

void require_degree(int K) {
  if (K < 3) throw StructureError("degree K must be at least 3, got " + std::to_string(K));
}

Columns<Expr> columns_of(const TensorField11& t) {
  Columns<Expr> cols;
  for (const auto& v : t.columns()) cols.push_back(v.components());
  return cols;
}

Columns<Expr> rows_of(const TensorField11& t) {
  Columns<Expr> rows(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) rows[i].push_back(t(i, j));
  }
  return rows;
}

template <typename T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

IdentityCheck holds(std::string name, bool ok, std::string why = {}) {
  IdentityCheck c{std::move(name), ok, std::nullopt, {}};
  if (!ok) c.residual = std::move(why);
  return c;
}

}  // namespace

IdentityCheck matrix_vanishes(std::string name, const TensorField11& residual, const Chart& chart) {
  IdentityCheck c{std::move(name), true, std::nullopt, {}};
  if (auto at = residual.first_nonzero()) {
    c.passed = false;
    c.witness = at;
    c.residual = chart.str(residual(at->first, at->second));
  }
  return c;
}

TensorField11 structure_residual(const TensorField11& F, const Rational& alpha,
                                 const Rational& beta, int K) {
  require_degree(K);
  TensorField11 fk = F.pow(static_cast<unsigned>(K));
  TensorField11 fk1 = fk * F;
  return alpha * fk1 + beta * fk + F;
}

bool verify_structure_equation(const TensorField11& F, const Rational& alpha,
                               const Rational& beta, int K) {
  return structure_residual(F, alpha, beta, K).is_zero();
}

std::pair<TensorField11, TensorField11> build_projectors(const TensorField11& F,
                                                         const Rational& alpha,
                                                         const Rational& beta, int K) {
  require_degree(K);
  TensorField11 fk1 = F.pow(static_cast<unsigned>(K - 1));
  TensorField11 fk = fk1 * F;
  TensorField11 l = -(alpha * fk + beta * fk1);
  TensorField11 m = TensorField11::identity(F.dim()) - l;
  return {std::move(l), std::move(m)};
}

FStructure make_structure(Chart chart, TensorField11 F, const Rational& alpha,
                          const Rational& beta, int K) {
  require_degree(K);
  if (F.dim() != chart.dim()) {
    throw DimensionMismatch("F is " + std::to_string(F.dim()) + "x" + std::to_string(F.dim()) +
                            " on a " + std::to_string(chart.dim()) + "-dimensional chart");
  }
  if (F.is_zero()) throw StructureError("F is the zero tensor");
  TensorField11 residual = structure_residual(F, alpha, beta, K);
  if (auto at = residual.first_nonzero()) {
    throw StructureError("structure equation fails: residual entry (" + std::to_string(at->first) + "," +
                         std::to_string(at->second) + ") of alpha F^(K+1) + beta F^K + F is " +
                         chart.str(residual(at->first, at->second)));
  }
  auto [l, m] = build_projectors(F, alpha, beta, K);
  std::size_t r = generic_rank(F);
  return FStructure{std::move(chart), std::move(F), alpha, beta, K, std::move(l), std::move(m), r};
}

IdentitySuite check_projector_identities(const FStructure& s) {
  const auto& [F, l, m] = std::tie(s.F, s.l, s.m);
  const auto n = s.dim();
  const auto I = TensorField11::identity(n);
  const auto& c = s.chart;
  IdentitySuite suite;
  suite.checks.push_back(matrix_vanishes("l+m=I", l + m - I, c));
  suite.checks.push_back(matrix_vanishes("l^2=l", l * l - l, c));
  suite.checks.push_back(matrix_vanishes("m^2=m", m * m - m, c));
  {
    auto a = matrix_vanishes("lF=Fl=F", l * F - F, c);
    if (a.passed) a = matrix_vanishes("lF=Fl=F", F * l - F, c);
    suite.checks.push_back(std::move(a));
  }
  {
    auto a = matrix_vanishes("mF=Fm=0", m * F, c);
    if (a.passed) a = matrix_vanishes("mF=Fm=0", F * m, c);
    suite.checks.push_back(std::move(a));
  }
  {
    auto a = matrix_vanishes("lm=ml=0", l * m, c);
    if (a.passed) a = matrix_vanishes("lm=ml=0", m * l, c);
    suite.checks.push_back(std::move(a));
  }
  return suite;
}

std::size_t generic_rank(const TensorField11& t) { return rank(columns_of(t)); }

RankReport checked_rank(const TensorField11& t, const Chart& chart, std::size_t samples,
                        std::uint64_t seed) {
  if (t.dim() != chart.dim()) throw DimensionMismatch("tensor and chart dimensions differ");
  RankReport report;
  report.rank = generic_rank(t);
  auto points = chart.sample_points(samples, seed, t.entries());
  for (const auto& p : points) {
    auto values = t.evaluate(p);
    Columns<Rational> cols(t.dim());
    for (std::size_t j = 0; j < t.dim(); ++j) {
      for (std::size_t i = 0; i < t.dim(); ++i) cols[j].push_back((*values)[i][j]);
    }
    std::size_t r = rank(std::move(cols));
    report.sample_ranks.push_back(r);
    if (r != report.rank) report.consistent = false;
  }
  if (points.size() < samples) {
    report.warning = "only " + std::to_string(points.size()) + " of " + std::to_string(samples) +
                     " admissible sample points found";
  } else if (!report.consistent) {
    report.warning = "pointwise rank differs from the generic rank at a sampled point";
  }
  return report;
}

Distribution distribution_of(const TensorField11& projector) {
  if (!(projector * projector == projector)) {
    throw std::invalid_argument("distribution_of needs an idempotent tensor");
  }
  Distribution d;
  const auto cols = columns_of(projector);
  d.columns = independent_subset(cols);
  for (auto j : d.columns) d.basis.push_back(projector.column(j));
  return d;
}

IdentitySuite check_decomposition(const FStructure& s) {
  const std::size_t n = s.dim();
  const std::size_t rl = generic_rank(s.l);
  const std::size_t rm = generic_rank(s.m);
  const auto lc = columns_of(s.l), mc = columns_of(s.m), fc = columns_of(s.F);
  const auto lr = rows_of(s.l), fr = rows_of(s.F);
  auto dims = [&](std::size_t a, std::size_t b) {
    return std::to_string(a) + " vs " + std::to_string(b);
  };
  IdentitySuite suite;
  suite.checks.push_back(holds("dim D_l = r", rl == s.rank, dims(rl, s.rank)));
  suite.checks.push_back(holds("dim D_m = n-r", rm == n - s.rank, dims(rm, n - s.rank)));
  {
    auto c = matrix_vanishes("Im l = ker m", s.m * s.l, s.chart);
    if (c.passed && rl + rm != n) c = holds(c.name, false, dims(rl + rm, n));
    suite.checks.push_back(std::move(c));
  }
  {
    auto c = matrix_vanishes("Im m = ker l", s.l * s.m, s.chart);
    if (c.passed && rl + rm != n) c = holds(c.name, false, dims(rl + rm, n));
    suite.checks.push_back(std::move(c));
  }
  {
    std::size_t joint = rank(concat(lc, fc));
    suite.checks.push_back(holds("Im l = Im F", joint == rl && joint == s.rank, dims(joint, rl)));
  }
  {
    std::size_t joint = rank(concat(lr, fr));
    suite.checks.push_back(holds("ker l = ker F", joint == rl && joint == s.rank, dims(joint, rl)));
  }
  {
    std::size_t joint = rank(concat(lc, mc));
    suite.checks.push_back(holds("TM = Im l + Im m", joint == n, dims(joint, n)));
  }
  return suite;
}

IdentitySuite verify_fhat(const FStructure& s, const TensorField11& fhat) {
  if (fhat.dim() != s.dim()) {
    throw DimensionMismatch("Fhat is " + std::to_string(fhat.dim()) + "-dimensional, chart is " +
                            std::to_string(s.dim()) + "-dimensional");
  }
  const auto& c = s.chart;
  IdentitySuite suite;
  suite.checks.push_back(matrix_vanishes("Fhat^2=-l", fhat * fhat + s.l, c));
  suite.checks.push_back(matrix_vanishes("lFhat=Fhat", s.l * fhat - fhat, c));
  suite.checks.push_back(matrix_vanishes("Fhatl=Fhat", fhat * s.l - fhat, c));
  suite.checks.push_back(matrix_vanishes("mFhat=0", s.m * fhat, c));
  suite.checks.push_back(matrix_vanishes("Fhatm=0", fhat * s.m, c));
  {
    const std::size_t rl = generic_rank(s.l);
    const std::size_t joint = rank(concat(rows_of(s.l), rows_of(fhat)));
    const std::size_t rf = generic_rank(fhat);
    suite.checks.push_back(holds("ker Fhat = ker l", joint == rl && rf == rl,
                                 std::to_string(rf) + " vs " + std::to_string(rl)));
  }
  suite.checks.push_back(holds("r even", s.rank % 2 == 0, "r = " + std::to_string(s.rank)));
  return suite;
}

}  // namespace fstruct
