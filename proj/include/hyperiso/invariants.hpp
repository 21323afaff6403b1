#pragma once

#include <vector>

#include "hyperiso/field/fields.hpp"

namespace hyperiso {

// Exponents c with sum c_i d_i = gcd of the d_i over the nonzero entries,
// c_i = 0 on zero entries; least sum |c_i|, ties broken towards the
// lexicographically greatest vector.
std::vector<long> normalizing_exponents(const std::vector<int>& degrees, const std::vector<bool>& nonzero);

// (I_i / I^(d_i/d))_i with I = prod I_i^c_i
template <class K>
std::vector<typename K::Elem> canonical_representative(const K& k, const std::vector<typename K::Elem>& values,
                                                       const std::vector<int>& degrees);

}  // namespace hyperiso
