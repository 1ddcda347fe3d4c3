#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fstruct/cr.hpp"
#include "fstruct/fstructure.hpp"
#include "fstruct/identity.hpp"
#include "fstruct/integrability.hpp"

namespace fstruct {

/// Every check the toolkit knows, run on one structure.
struct Audit {
  IdentitySuite projector;      // l + m = I, l^2 = l, ...
  IdentitySuite decomposition;  // images, kernels, dim D_l = r, dim D_m = n - r
  IdentitySuite nijenhuis;      // projector identities for N_F, N_l, N_m
  std::optional<IdentitySuite> fhat;  // verify_fhat, when Fhat is supplied
  IntegrabilityReport integrability;
  std::optional<CrReport> cr;         // when Fhat is supplied and valid

  /// Projector, decomposition, Nijenhuis and Fhat suites all pass.
  bool identities_ok() const;
  /// Every notion's criteria agree and the implication order holds.
  bool equivalences_ok() const;
  /// Span-membership involutivity matches the D_l and D_m verdicts.
  bool frobenius_ok() const;
  /// Vanishing N_Fhat came with an involutive H, and the generators of H
  /// are Fhat-eigenfields.
  bool cr_ok() const;

  bool ok() const { return identities_ok() && equivalences_ok() && frobenius_ok() && cr_ok(); }
  /// One line per failed check.
  std::vector<std::string> failures() const;
};

Audit audit(const FStructure& s, const std::optional<TensorField11>& fhat = std::nullopt);

}  // namespace fstruct
