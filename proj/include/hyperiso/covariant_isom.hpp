#pragma once

#include "hyperiso/covariants.hpp"
#include "hyperiso/isom.hpp"

namespace hyperiso {

struct CovariantSearchConfig {
  int B_order = 4;
  int B_degree = 2;
  int B_singular = 0;
  uint64_t seed = 1;

  static CovariantSearchConfig generic(uint64_t seed = 1) { return {4, 2, 0, seed}; }
  static CovariantSearchConfig deep(int n, uint64_t seed = 1) { return {n < 8 ? n : 8, 10, 10, seed}; }
};

// Isomorphisms of f1, f2 found on a covariant with >= 3 distinct roots, then
// filtered on the forms themselves; falls back to the direct method.
template <class K>
IsomResult<K> is_gl2_equiv_covariant(const FormOps<K>& ops, const Form<K>& f1, const Form<K>& f2,
                                     const CovariantSearchConfig& cfg = {}, const FastOptions& fast = {});

// covariant, then direct method; the same as is_gl2_equiv_covariant
template <class K>
IsomResult<K> is_gl2_equiv(const FormOps<K>& ops, const Form<K>& f1, const Form<K>& f2) {
  return is_gl2_equiv_covariant(ops, f1, f2);
}

}  // namespace hyperiso
