#pragma once

// Hand-built structures shared by several unit tests.

#include "fstruct/fstructure.hpp"
#include "fstruct/manifest.hpp"

namespace fstruct::testing {

inline FStructure example(int id) { return load(builtin_example(id)).structure; }

/// F = P diag(J, 0) P^-1 on (x, y, z) with P = E_23(x) E_32(1), J the 2x2
/// rotation; satisfies F^3 + F = 0 and D_l = span{dx, (1+x)dy + dz} is not
/// involutive.
inline FStructure twisted() {
  Chart c({"x", "y", "z"});
  auto base = parse_tensor(c, {{"0", "-1", "0"}, {"1", "0", "0"}, {"0", "0", "0"}});
  auto p = parse_tensor(c, {{"1", "0", "0"}, {"0", "1", "x"}, {"0", "0", "1"}}) *
           parse_tensor(c, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "1", "1"}});
  return make_structure(c, p * base * *inverse(p), 0, 1, 3);
}

}  // namespace fstruct::testing
