#pragma once

#include <string>
#include <vector>

#include "fstruct/fstructure.hpp"
#include "fstruct/identity.hpp"
#include "fstruct/rational.hpp"

namespace fstruct {

/// One integrability notion decided by several criteria that must agree.
/// Each criterion is an IdentityCheck whose `passed` is the criterion's
/// verdict; a false verdict carries the frame pair and residual.
struct Decision {
  std::string notion;
  bool verdict = false;
  bool consistent = true;
  std::vector<IdentityCheck> criteria;
};

/// Criteria ids:
///   Dl:       "m[lX,lY]=0", "N_l(lX,lY)=0", "mN_F(X,Y)=0", "N_F=lN_F",
///             "mN_F(FX,FY)=0", "mN_F(lX,lY)=0", "N_l(FX,FY)=0"
///   Dm:       "l[mX,mY]=0", "N_l(mX,mY)=0", "N_F(mX,mY)=0", "lN_F(mX,mY)=0"
///   both:     "N_l=0", "N_F=lN_F(lX,lY)+N_F(lX,mY)+N_F(mX,lY)", "Dl and Dm"
///   partial:  "N_F(lX,lY)=0", "N_F(FX,FY)=0"
///   complete: "N_F=N_F(lX,mY)+N_F(mX,lY)", "Dm and partial"
///   full:     "N_F=0", "complete and N_F(lX,mY)=-N_F(mX,lY)"
Decision decide_Dl(const FStructure& s);
Decision decide_Dm(const FStructure& s);
Decision decide_both(const FStructure& s);
Decision decide_partial(const FStructure& s);
Decision decide_complete(const FStructure& s);
Decision decide_full(const FStructure& s);

/// Involutivity by span membership: every bracket of basis fields solves
/// into the basis over the rational function field. Throws
/// std::invalid_argument when the basis is dependent.
bool frobenius_crosscheck(const Distribution& d);

struct IntegrabilityReport {
  bool Dl_integrable = false;
  bool Dm_integrable = false;
  bool both_distributions = false;
  bool partially_integrable = false;
  bool completely_integrable = false;
  bool F_integrable = false;
  bool frobenius_Dl = false;
  bool frobenius_Dm = false;
  std::vector<Decision> evidence;  // Dl, Dm, both, partial, complete, full
  /// Disagreements within a notion, with the direct involutivity test, or
  /// with the implication order full => complete => partial => Dl and
  /// complete => Dm. Empty iff consistency_ok.
  std::vector<std::string> issues;
  bool consistency_ok = true;
};

/// Evaluates every notion once, sharing the Nijenhuis tables.
IntegrabilityReport analyze_integrability(const FStructure& s);

/// Throws InconsistencyError carrying the first issue.
void require_consistent(const IntegrabilityReport& r);

struct Classification {
  std::string label;       // first matching case, or "generic"
  int case_number = 0;     // 1..9, 0 for generic
  std::vector<int> matches;  // every case whose pattern matches, ascending
};

/// Exact match of (alpha, beta, K) against the nine special equations, in
/// order: F^3+F, F^3-F, F^3+lambda^2 F, F^5+F, F^5-F, F^{K+1}+F,
/// F^K+(-1)^{K+1}F, F^{p1 p2}+F, F^{p^2+2}+F. Throws std::invalid_argument
/// for K < 3.
Classification classify(const Rational& alpha, const Rational& beta, int K);

}  // namespace fstruct
