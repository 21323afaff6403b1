#pragma once

#include <optional>
#include <vector>

#include "hyperiso/covariant_isom.hpp"
#include "hyperiso/extension.hpp"

namespace hyperiso {

// y^2 = f(x, z) in weights (1, g + 1, 1); f has degree 2g + 2
template <class K>
struct HyperellipticCurve {
  Form<K> f;
  int genus = 0;
};

// odd degree input gets a root at infinity; f must be separable
template <class K>
HyperellipticCurve<K> make_curve(const FormOps<K>& ops, Form<K> f);

// (x, z, y) -> (M^-1 (x, z), y / e) style map with act(M, f1) = e^2 f2
template <class K>
struct CurveIso {
  Moebius<K> M;
  typename K::Elem e;
  bool operator==(const CurveIso&) const = default;
};

// representative of (M, e) ~ (l M, l^-(g+1) e) with M projectively normal
template <class K>
CurveIso<K> canonical_iso(const FormOps<K>& ops, const CurveIso<K>& c, int genus);

template <class K>
struct CurveIsomResult {
  std::vector<CurveIso<K>> isos;
  // form isomorphisms whose scalar is not a square: isomorphic only over the quadratic extension
  std::vector<Moebius<K>> twists;
  std::vector<typename K::Elem> twist_scalars;
  std::optional<Extension<K>> quad;  // set when twists were lifted
  std::vector<CurveIso<ExtField>> quad_isos;
};

template <class K>
CurveIsomResult<K> curve_isoms(const FormOps<K>& ops, const HyperellipticCurve<K>& X1, const HyperellipticCurve<K>& X2,
                               bool lift_twists = false);

struct AutSweep {
  long order = 0;       // largest reduced automorphism count seen
  unsigned ext = 1;     // first extension degree reaching it
  std::vector<long> counts;  // counts[j - 1] over the degree j extension
};

template <class K>
AutSweep reduced_aut_order(const FormOps<K>& ops, const HyperellipticCurve<K>& X, unsigned max_ext, uint64_t seed = 1);

// extension of K of degree d, by a random irreducible
template <class K>
Extension<K> extension_of_degree(const K& k, unsigned d, uint64_t seed = 1);

}  // namespace hyperiso
