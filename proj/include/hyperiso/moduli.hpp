#pragma once

#include <vector>

#include "hyperiso/covariants.hpp"
#include "hyperiso/invariants.hpp"

namespace hyperiso {

// Order 0 recipes shipped for n = 4 (I, J up to constants), 6 and 8.
std::vector<RecipePtr> default_invariants(int n);

template <class K>
struct InvariantTuple {
  std::vector<typename K::Elem> values;
  std::vector<int> degrees;
};

template <class K>
InvariantTuple<K> invariant_profile(const FormOps<K>& ops, const Form<K>& f, const std::vector<RecipePtr>& recipes);

template <class K>
InvariantTuple<K> invariant_profile(const FormOps<K>& ops, const Form<K>& f) {
  return invariant_profile(ops, f, default_invariants(f.degree()));
}

template <class K>
struct ModuliPoint {
  std::vector<typename K::Elem> representative;
  std::vector<int> degrees;
  unsigned field_degree = 1;  // moduli field is F_{p^field_degree}; 1 over QQ
  FieldDesc field;
};

template <class K>
ModuliPoint<K> field_of_moduli(const FormOps<K>& ops, const Form<K>& f, const std::vector<RecipePtr>& recipes);

template <class K>
ModuliPoint<K> field_of_moduli(const FormOps<K>& ops, const Form<K>& f) {
  return field_of_moduli(ops, f, default_invariants(f.degree()));
}

}  // namespace hyperiso
