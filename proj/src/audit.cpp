#include "fstruct/audit.hpp"

#include "fstruct/nijenhuis.hpp"

namespace fstruct {

namespace {

void collect(const std::string& suite, const IdentitySuite& s, std::vector<std::string>& out) {
  for (const auto& c : s.checks) {
    if (c.passed) continue;
    std::string line = suite + ": " + c.name;
    if (c.witness) {
      line += " at (" + std::to_string(c.witness->first) + "," + std::to_string(c.witness->second) + ")";
    }
    if (!c.residual.empty()) line += ", residual " + c.residual;
    out.push_back(std::move(line));
  }
}

}  // namespace

bool Audit::identities_ok() const {
  return projector.all_passed() && decomposition.all_passed() && nijenhuis.all_passed() &&
         (!fhat || fhat->all_passed());
}

bool Audit::equivalences_ok() const {
  for (const auto& d : integrability.evidence) {
    if (!d.consistent) return false;
  }
  const auto& r = integrability;
  return (!r.F_integrable || r.completely_integrable) &&
         (!r.completely_integrable || (r.partially_integrable && r.Dm_integrable)) &&
         (!r.partially_integrable || r.Dl_integrable);
}

bool Audit::frobenius_ok() const {
  return integrability.frobenius_Dl == integrability.Dl_integrable &&
         integrability.frobenius_Dm == integrability.Dm_integrable;
}

bool Audit::cr_ok() const { return !cr || (cr->implication_ok && cr->eigenbundle && cr->disjoint); }

std::vector<std::string> Audit::failures() const {
  std::vector<std::string> out;
  collect("projector", projector, out);
  collect("decomposition", decomposition, out);
  collect("nijenhuis", nijenhuis, out);
  if (fhat) collect("fhat", *fhat, out);
  for (const auto& issue : integrability.issues) out.push_back("integrability: " + issue);
  if (cr) {
    if (!cr->implication_ok) out.push_back("cr: N_Fhat vanishes but H is not involutive");
    if (!cr->eigenbundle) out.push_back("cr: generator is not an Fhat eigenfield");
    if (!cr->disjoint) out.push_back("cr: H meets its conjugate");
  }
  return out;
}

Audit audit(const FStructure& s, const std::optional<TensorField11>& fhat) {
  Audit a;
  a.projector = check_projector_identities(s);
  a.decomposition = check_decomposition(s);
  a.nijenhuis = nijenhuis_identity_suite(s);
  a.integrability = analyze_integrability(s);
  if (fhat) {
    a.fhat = verify_fhat(s, *fhat);
    if (a.fhat->all_passed()) a.cr = check_cr(s, *fhat);
  }
  return a;
}

}  // namespace fstruct
