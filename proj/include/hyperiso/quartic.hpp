#pragma once

#include <string>
#include <utility>

#include "hyperiso/extension.hpp"
#include "hyperiso/forms.hpp"

namespace hyperiso {

// I = 12 a4 a0 - 3 a3 a1 + a2^2,
// J = 72 a4 a2 a0 + 9 a3 a2 a1 - 27 a4 a1^2 - 27 a0 a3^2 - 2 a2^3
template <class K>
std::pair<typename K::Elem, typename K::Elem> quartic_IJ(const K& k, const Form<K>& q);

// x^3 z + c x z^3 + c z^4 with c = -27 I^3 / J^2; x^3 z + x z^3 when J = 0 and
// x^3 z + z^4 when I = 0
template <class K>
Form<K> quartic_from_IJ(const K& k, const typename K::Elem& I, const typename K::Elem& J);

enum class QuarticAut { A4, D8, D4 };
std::string to_string(QuarticAut g);
int group_order(QuarticAut g);

template <class K>
QuarticAut quartic_aut_group(const K& k, const Form<K>& q);

// M with act(M, q) ~ quartic_from_IJ(I(q), J(q)), built from the root (x0 : z0)
// of q. Needs I(q) J(q) != 0.
template <class K>
Moebius<K> quartic_iso_at_root(const FormOps<K>& ops, const Form<K>& q, const typename K::Elem& x0,
                               const typename K::Elem& z0);

// Same, over the field generated by a root of q of least degree.
template <class K>
struct QuarticRootIso {
  Extension<K> ext;
  unsigned degree;  // [L : K]
  Moebius<ExtField> M;
  Form<ExtField> target;
};

template <class K>
QuarticRootIso<K> quartic_iso_over_root_field(const FormOps<K>& ops, const Form<K>& q, uint64_t seed = 1);

}  // namespace hyperiso
