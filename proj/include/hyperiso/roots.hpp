#pragma once

#include <optional>
#include <vector>

#include "hyperiso/poly.hpp"

namespace hyperiso {

// Roots of a (nonzero) lying in K itself, each listed once, sorted by the
// field's element order. Randomized splitting uses the given seed.
template <class K>
std::vector<typename K::Elem> roots_in_field(const PolyRing<K>& R, const typename PolyRing<K>::P& a, uint64_t seed = 1);

// some x with x^n = a, if one exists in K
template <class K>
std::optional<typename K::Elem> nth_root(const K& k, const typename K::Elem& a, unsigned long n);

// all x in K with x^n = 1
template <class K>
std::vector<typename K::Elem> roots_of_unity(const K& k, unsigned long n);

// a / gcd(a, a'); needs characteristic 0 or > deg a
template <class K>
typename PolyRing<K>::P squarefree_part(const PolyRing<K>& R, const typename PolyRing<K>::P& a);

// product of the distinct monic irreducible factors, any characteristic
template <class K>
typename PolyRing<K>::P radical(const PolyRing<K>& R, const typename PolyRing<K>::P& a);

// finite fields only
template <class K>
bool is_irreducible(const PolyRing<K>& R, const typename PolyRing<K>::P& a);

// monic irreducible factor of least degree of a squarefree polynomial (finite K)
template <class K>
typename PolyRing<K>::P smallest_irreducible_factor(const PolyRing<K>& R, const typename PolyRing<K>::P& a, uint64_t seed = 1);

// random monic irreducible of degree d over F_p
std::vector<uint64_t> random_irreducible(const PrimeField& fp, unsigned d, Rng& rng);

}  // namespace hyperiso
