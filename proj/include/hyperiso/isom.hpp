#pragma once

#include <string>
#include <vector>

#include "hyperiso/forms.hpp"

namespace hyperiso {

// PGL2 classes M with act(M, f1) = scalars[i] * f2, sorted and duplicate-free.
template <class K>
struct IsomResult {
  std::vector<Moebius<K>> matrices;
  std::vector<typename K::Elem> scalars;
  bool fallback = false;  // answered by enumeration of PGL2(k)
  std::string method;     // "fast", "oracle" or the covariant recipe used
  size_t size() const { return matrices.size(); }
  bool empty() const { return matrices.empty(); }
};

template <class K>
struct Normalized {
  Form<K> g;
  Moebius<K> T;  // act(T, f) = g
};

// g with A_n != 0 and A_{n-1} = 0; throws PreconditionError when p | n or no
// point with f != 0 is found among (1 : t), t = 0, 1, ...
template <class K>
Normalized<K> normalize_input(const FormOps<K>& ops, const Form<K>& f);

// L_i(gamma), i = 2..imax, for a target f2 and a normalized source A:
// L_i = A_n sum_j C(i, j) (-F_z)^j F_x^(i-j) d^i F / dx^j dz^(i-j) at (1, gamma),
// divided by F(1, gamma). An isomorphism with t = 1/delta satisfies
// L_i = i! A_{n-i} F_x^i t^i.
template <class K>
struct GammaSystem {
  std::vector<typename PolyRing<K>::P> L;  // index i, entries 0 and 1 unused
  std::vector<bool> divided;               // L_i was divisible by F(1, gamma)
  typename PolyRing<K>::P F;               // F(1, gamma)
};

template <class K>
GammaSystem<K> gamma_system(const FormOps<K>& ops, const Form<K>& f2, const Form<K>& A, int imax);

// gcd of the t-free relations; empty polynomial when every relation vanishes
template <class K>
typename PolyRing<K>::P candidate_gammas(const FormOps<K>& ops, const GammaSystem<K>& sys, const Form<K>& A);

struct FastOptions {
  int imax = 4;
  bool allow_fallback = true;
  unsigned long fallback_limit = 100000;  // largest q (q^2 - 1) enumerated
};

template <class K>
IsomResult<K> is_gl2_equiv_fast(const FormOps<K>& ops, const Form<K>& f1, const Form<K>& f2,
                                const FastOptions& opt = {});

// exhaustive search over PGL2(F_q)
template <class K>
IsomResult<K> oracle_isom(const FormOps<K>& ops, const Form<K>& f1, const Form<K>& f2,
                          unsigned long limit = 1000000);

// sorts, removes projective duplicates and verifies each M; throws Error if one fails
template <class K>
IsomResult<K> finalize_isoms(const FormOps<K>& ops, const Form<K>& f1, const Form<K>& f2,
                             const std::vector<Moebius<K>>& ms);

// every element of a finite field, in index order
template <class K>
std::vector<typename K::Elem> field_elements(const K& k);

// throws PreconditionError unless n >= 3 and f has >= 3 distinct roots
template <class K>
void check_isom_input(const FormOps<K>& ops, const Form<K>& f);

}  // namespace hyperiso
