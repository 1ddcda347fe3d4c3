#include "fstruct/integrability.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "fstruct/errors.hpp"
#include "fstruct/linalg.hpp"
#include "fstruct/nijenhuis.hpp"

namespace fstruct {

namespace {

using Pair = std::function<VectorField(std::size_t, std::size_t)>;

// Lazily evaluated Nijenhuis and bracket tables on projected frame fields,
// shared by all notions of one structure.
class Tables {
 public:
  explicit Tables(const FStructure& s)
      : s_(s), e_(coordinate_frame(s.dim())), f_(s.F.columns()), l_(s.l.columns()),
        m_(s.m.columns()) {}

  const FStructure& structure() const { return s_; }
  std::size_t n() const { return s_.dim(); }

  const FrameTable& nf() { return get(nf_, s_.F, e_, e_); }
  const FrameTable& nf_ll() { return get(nf_ll_, s_.F, l_, l_); }
  const FrameTable& nf_mm() { return get(nf_mm_, s_.F, m_, m_); }
  const FrameTable& nf_ff() { return get(nf_ff_, s_.F, f_, f_); }
  const FrameTable& nl() { return get(nl_, s_.l, e_, e_); }
  const FrameTable& nl_ll() { return get(nl_ll_, s_.l, l_, l_); }
  const FrameTable& nl_mm() { return get(nl_mm_, s_.l, m_, m_); }
  const FrameTable& nl_ff() { return get(nl_ff_, s_.l, f_, f_); }
  const FrameTable& br_ll() { return bracket(br_ll_, l_); }
  const FrameTable& br_mm() { return bracket(br_mm_, m_); }

  // N_F(l di, m dj) and N_F(m di, l dj) for all ordered pairs.
  const VectorField& nf_lm(std::size_t i, std::size_t j) { return mixed(nf_lm_, l_, m_)[i * n() + j]; }
  const VectorField& nf_ml(std::size_t i, std::size_t j) { return mixed(nf_ml_, m_, l_)[i * n() + j]; }

 private:
  const FrameTable& get(std::optional<FrameTable>& slot, const TensorField11& t,
                        const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
    if (!slot) {
      slot.emplace(n(), [&](std::size_t i, std::size_t j) { return nijenhuis_apply(t, a[i], b[j]); });
    }
    return *slot;
  }
  const FrameTable& bracket(std::optional<FrameTable>& slot, const std::vector<VectorField>& a) {
    if (!slot) slot.emplace(n(), [&](std::size_t i, std::size_t j) { return lie_bracket(a[i], a[j]); });
    return *slot;
  }
  const std::vector<VectorField>& mixed(std::optional<std::vector<VectorField>>& slot,
                                        const std::vector<VectorField>& a,
                                        const std::vector<VectorField>& b) {
    if (!slot) {
      slot.emplace();
      slot->reserve(n() * n());
      for (std::size_t i = 0; i < n(); ++i) {
        for (std::size_t j = 0; j < n(); ++j) slot->push_back(nijenhuis_apply(s_.F, a[i], b[j]));
      }
    }
    return *slot;
  }

  const FStructure& s_;
  std::vector<VectorField> e_, f_, l_, m_;
  std::optional<FrameTable> nf_, nf_ll_, nf_mm_, nf_ff_, nl_, nl_ll_, nl_mm_, nl_ff_, br_ll_, br_mm_;
  std::optional<std::vector<VectorField>> nf_lm_, nf_ml_;
};

IdentityCheck vanishes(std::string id, const Chart& chart, const Pair& value) {
  return frame_identity(std::move(id), chart, value,
                        [&](std::size_t, std::size_t) { return VectorField::zero(chart.dim()); });
}

IdentityCheck table_vanishes(std::string id, const Chart& chart, const FrameTable& t,
                             const TensorField11* apply = nullptr) {
  return vanishes(std::move(id), chart, [&](std::size_t i, std::size_t j) {
    return apply ? *apply * t.at(i, j) : t.at(i, j);
  });
}

IdentityCheck verdict(std::string id, bool holds) {
  return IdentityCheck{std::move(id), holds, std::nullopt, {}};
}

Decision settle(std::string notion, std::vector<IdentityCheck> criteria) {
  Decision d{std::move(notion), criteria.front().passed, true, std::move(criteria)};
  for (const auto& c : d.criteria) {
    if (c.passed != d.verdict) d.consistent = false;
  }
  return d;
}

Decision Dl(Tables& t) {
  const auto& s = t.structure();
  const auto& c = s.chart;
  return settle("Dl", {
                          table_vanishes("m[lX,lY]=0", c, t.br_ll(), &s.m),
                          table_vanishes("N_l(lX,lY)=0", c, t.nl_ll()),
                          table_vanishes("mN_F(X,Y)=0", c, t.nf(), &s.m),
                          frame_identity(
                              "N_F=lN_F", c, [&](auto i, auto j) { return t.nf().at(i, j); },
                              [&](auto i, auto j) { return s.l * t.nf().at(i, j); }),
                          table_vanishes("mN_F(FX,FY)=0", c, t.nf_ff(), &s.m),
                          table_vanishes("mN_F(lX,lY)=0", c, t.nf_ll(), &s.m),
                          table_vanishes("N_l(FX,FY)=0", c, t.nl_ff()),
                      });
}

Decision Dm(Tables& t) {
  const auto& s = t.structure();
  const auto& c = s.chart;
  return settle("Dm", {
                          table_vanishes("l[mX,mY]=0", c, t.br_mm(), &s.l),
                          table_vanishes("N_l(mX,mY)=0", c, t.nl_mm()),
                          table_vanishes("N_F(mX,mY)=0", c, t.nf_mm()),
                          table_vanishes("lN_F(mX,mY)=0", c, t.nf_mm(), &s.l),
                      });
}

Decision both(Tables& t, bool dl, bool dm) {
  const auto& s = t.structure();
  const auto& c = s.chart;
  return settle("both", {
                            table_vanishes("N_l=0", c, t.nl()),
                            frame_identity(
                                "N_F=lN_F(lX,lY)+N_F(lX,mY)+N_F(mX,lY)", c,
                                [&](auto i, auto j) { return t.nf().at(i, j); },
                                [&](auto i, auto j) {
                                  return s.l * t.nf_ll().at(i, j) + t.nf_lm(i, j) + t.nf_ml(i, j);
                                }),
                            verdict("Dl and Dm", dl && dm),
                        });
}

Decision partial(Tables& t) {
  const auto& c = t.structure().chart;
  return settle("partial", {
                               table_vanishes("N_F(lX,lY)=0", c, t.nf_ll()),
                               table_vanishes("N_F(FX,FY)=0", c, t.nf_ff()),
                           });
}

Decision complete(Tables& t, bool dm, bool part) {
  const auto& c = t.structure().chart;
  return settle("complete", {
                                frame_identity(
                                    "N_F=N_F(lX,mY)+N_F(mX,lY)", c,
                                    [&](auto i, auto j) { return t.nf().at(i, j); },
                                    [&](auto i, auto j) { return t.nf_lm(i, j) + t.nf_ml(i, j); }),
                                verdict("Dm and partial", dm && part),
                            });
}

// N_F(l di, m dj) = -N_F(m di, l dj) on every ordered pair, i = j included.
IdentityCheck mixed_antisymmetry(Tables& t) {
  const auto& c = t.structure().chart;
  IdentityCheck out{"N_F(lX,mY)=-N_F(mX,lY)", true, std::nullopt, {}};
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j = 0; j < t.n(); ++j) {
      VectorField d = t.nf_lm(i, j) + t.nf_ml(i, j);
      if (!d.is_zero()) {
        out.passed = false;
        out.witness = std::pair{i, j};
        out.residual = to_string(d, c.vars());
        return out;
      }
    }
  }
  return out;
}

Decision full(Tables& t, bool comp) {
  const auto& c = t.structure().chart;
  IdentityCheck route2 = mixed_antisymmetry(t);
  route2.name = "complete and N_F(lX,mY)=-N_F(mX,lY)";
  if (!comp && route2.passed) {
    route2.passed = false;
    route2.residual = "not completely integrable";
  }
  return settle("full", {table_vanishes("N_F=0", c, t.nf()), std::move(route2)});
}

}  // namespace

Decision decide_Dl(const FStructure& s) {
  Tables t(s);
  return Dl(t);
}

Decision decide_Dm(const FStructure& s) {
  Tables t(s);
  return Dm(t);
}

Decision decide_both(const FStructure& s) {
  Tables t(s);
  return both(t, Dl(t).verdict, Dm(t).verdict);
}

Decision decide_partial(const FStructure& s) {
  Tables t(s);
  return partial(t);
}

Decision decide_complete(const FStructure& s) {
  Tables t(s);
  return complete(t, Dm(t).verdict, partial(t).verdict);
}

Decision decide_full(const FStructure& s) {
  Tables t(s);
  return full(t, complete(t, Dm(t).verdict, partial(t).verdict).verdict);
}

bool frobenius_crosscheck(const Distribution& d) {
  if (d.basis.empty()) return true;
  const std::size_t n = d.basis.front().dim();
  Columns<Expr> cols;
  for (const auto& v : d.basis) cols.push_back(v.components());
  if (rank(cols) != cols.size()) throw std::invalid_argument("distribution basis is dependent");
  const Expr zero(n);
  for (std::size_t a = 0; a < d.basis.size(); ++a) {
    for (std::size_t b = a + 1; b < d.basis.size(); ++b) {
      VectorField br = lie_bracket(d.basis[a], d.basis[b]);
      if (br.is_zero()) continue;
      if (!solve_in_span(cols, br.components(), zero)) return false;
    }
  }
  return true;
}

IntegrabilityReport analyze_integrability(const FStructure& s) {
  Tables t(s);
  IntegrabilityReport r;
  Decision dl = Dl(t);
  Decision dm = Dm(t);
  Decision b = both(t, dl.verdict, dm.verdict);
  Decision p = partial(t);
  Decision c = complete(t, dm.verdict, p.verdict);
  Decision f = full(t, c.verdict);
  r.Dl_integrable = dl.verdict;
  r.Dm_integrable = dm.verdict;
  r.both_distributions = b.verdict;
  r.partially_integrable = p.verdict;
  r.completely_integrable = c.verdict;
  r.F_integrable = f.verdict;
  r.frobenius_Dl = frobenius_crosscheck(distribution_of(s.l));
  r.frobenius_Dm = frobenius_crosscheck(distribution_of(s.m));
  r.evidence = {dl, dm, b, p, c, f};

  for (const auto& d : r.evidence) {
    if (d.consistent) continue;
    std::string msg = d.notion + " criteria disagree:";
    for (const auto& k : d.criteria) msg += " [" + k.name + "]=" + (k.passed ? "true" : "false");
    r.issues.push_back(msg);
  }
  if (r.frobenius_Dl != r.Dl_integrable) r.issues.push_back("Dl: span-membership test disagrees");
  if (r.frobenius_Dm != r.Dm_integrable) r.issues.push_back("Dm: span-membership test disagrees");
  if (r.F_integrable && !r.completely_integrable) r.issues.push_back("integrable but not completely");
  if (r.completely_integrable && !r.partially_integrable) r.issues.push_back("completely but not partially");
  if (r.completely_integrable && !r.Dm_integrable) r.issues.push_back("completely but Dm not integrable");
  if (r.partially_integrable && !r.Dl_integrable) r.issues.push_back("partially but Dl not integrable");
  r.consistency_ok = r.issues.empty();
  return r;
}

void require_consistent(const IntegrabilityReport& r) {
  if (!r.consistency_ok) throw InconsistencyError(r.issues.front());
}

namespace {

// Composite k split as (smallest factor, cofactor).
std::optional<std::pair<int, int>> composite_split(int k) {
  for (int d = 2; d * d <= k; ++d) {
    if (k % d == 0) return std::pair{d, k / d};
  }
  return std::nullopt;
}

std::optional<int> square_root(int k) {
  for (int p = 1; p * p <= k; ++p) {
    if (p * p == k) return p;
  }
  return std::nullopt;
}

}  // namespace

Classification classify(const Rational& alpha, const Rational& beta, int K) {
  if (K < 3) throw std::invalid_argument("K must be at least 3, got " + std::to_string(K));
  const std::string k = std::to_string(K);
  const bool a0 = alpha == 0;
  std::vector<std::pair<int, std::string>> hits;
  if (a0 && beta == 1 && K == 3) hits.emplace_back(1, "F³+F=0 (Yano)");
  if (a0 && beta == -1 && K == 3) hits.emplace_back(2, "F³−F=0");
  if (a0 && beta > 0 && K == 3) {
    Rational lambda2 = 1 / beta;
    lambda2.canonicalize();
    hits.emplace_back(3, "F³+λ²F=0 with λ²=" + to_string(lambda2));
  }
  if (a0 && beta == 1 && K == 5) hits.emplace_back(4, "F⁵+F=0");
  if (a0 && beta == -1 && K == 5) hits.emplace_back(5, "F⁵−F=0");
  if (alpha == 1 && beta == 0) hits.emplace_back(6, "F^{K+1}+F=0 with K=" + k);
  if (a0 && beta == (K % 2 == 1 ? 1 : -1)) hits.emplace_back(7, "F^K+(−1)^{K+1}F=0 with K=" + k);
  if (a0 && beta == 1) {
    if (auto pq = composite_split(K)) {
      hits.emplace_back(8, "F^{p₁p₂}+F=0 with K=" + std::to_string(pq->first) + "·" +
                               std::to_string(pq->second));
    }
    if (auto p = square_root(K - 2)) hits.emplace_back(9, "F^{p²+2}+F=0 with p=" + std::to_string(*p));
  }
  Classification out;
  if (hits.empty()) {
    out.label = "generic";
    return out;
  }
  out.label = hits.front().second;
  out.case_number = hits.front().first;
  for (const auto& h : hits) out.matches.push_back(h.first);
  return out;
}

}  // namespace fstruct
