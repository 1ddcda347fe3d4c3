#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fstruct {

/// Outcome of one exact identity check. For matrix identities the witness is
/// the (row, column) of the first nonzero residual entry; for bilinear ones it
/// is the frame pair (i, j).
struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string residual;
};

struct IdentitySuite {
  std::vector<IdentityCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  const IdentityCheck* first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }
  const IdentityCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

}  // namespace fstruct
