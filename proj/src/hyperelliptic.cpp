#include "hyperiso/hyperelliptic.hpp"

#include "hyperiso/roots.hpp"

namespace hyperiso {

template <class K>
HyperellipticCurve<K> make_curve(const FormOps<K>& ops, Form<K> f) {
  const K& k = ops.field();
  if (k.characteristic() == 2) throw CharacteristicObstruction("hyperelliptic models need p != 2");
  if (f.degree() % 2) f.a.push_back(k.zero());
  if (f.degree() < 6) throw PreconditionError("genus must be at least 2");
  if (k.is_zero(ops.discriminant(f))) throw PreconditionError("curve form is not separable");
  return HyperellipticCurve<K>{f, f.degree() / 2 - 1};
}

template <class K>
CurveIso<K> canonical_iso(const FormOps<K>& ops, const CurveIso<K>& c, int genus) {
  const K& k = ops.field();
  const auto& m = c.M;
  auto lead = !k.is_zero(m.m11) ? m.m11 : !k.is_zero(m.m12) ? m.m12 : !k.is_zero(m.m21) ? m.m21 : m.m22;
  return CurveIso<K>{ops.mat_scale(m, k.inv(lead)), k.mul(c.e, power(k, lead, static_cast<long long>(genus + 1)))};
}

template <class K>
Extension<K> extension_of_degree(const K& k, unsigned d, uint64_t seed) {
  if constexpr (!K::finite) {
    (void)k, (void)d, (void)seed;
    throw CapabilityError("extensions of QQ are not supported");
  } else {
    if (d == 1) return trivial_extension(k);
    PolyRing<K> R(k);
    Rng rng(seed);
    for (;;) {
      auto g = R.random(d, rng, true);
      if (is_irreducible(R, g)) return build_extension(k, g, seed);
    }
  }
}

template <class K>
CurveIsomResult<K> curve_isoms(const FormOps<K>& ops, const HyperellipticCurve<K>& X1, const HyperellipticCurve<K>& X2,
                               bool lift_twists) {
  const K& k = ops.field();
  if (k.characteristic() == 2) throw CharacteristicObstruction("hyperelliptic models need p != 2");
  if (X1.genus != X2.genus) return {};
  const int g = X1.genus;
  auto forms = is_gl2_equiv_covariant(ops, X1.f, X2.f);
  CurveIsomResult<K> res;
  for (size_t i = 0; i < forms.size(); ++i) {
    const auto& M = forms.matrices[i];
    const auto& mu = forms.scalars[i];
    if (auto e = nth_root(k, mu, 2)) {
      res.isos.push_back(canonical_iso(ops, CurveIso<K>{M, *e}, g));
      res.isos.push_back(canonical_iso(ops, CurveIso<K>{M, k.neg(*e)}, g));
    } else {
      res.twists.push_back(M);
      res.twist_scalars.push_back(mu);
    }
  }
  if constexpr (K::finite) {
    if (lift_twists && !res.twists.empty()) {
      const auto& u = res.twist_scalars.front();
      std::vector<typename K::Elem> x2u{k.neg(u), k.zero(), k.one()};
      auto ext = build_extension(k, x2u);
      FormOps<ExtField> opl(ext.field);
      const auto& L = ext.field;
      for (size_t i = 0; i < res.twists.size(); ++i) {
        const auto& M = res.twists[i];
        Moebius<ExtField> ML{ext.embedding.map(M.m11), ext.embedding.map(M.m12), ext.embedding.map(M.m21),
                             ext.embedding.map(M.m22)};
        auto e = nth_root(L, ext.embedding.map(res.twist_scalars[i]), 2);
        if (!e) throw Error("square root missing in the quadratic extension");
        res.quad_isos.push_back(canonical_iso(opl, CurveIso<ExtField>{ML, *e}, g));
        res.quad_isos.push_back(canonical_iso(opl, CurveIso<ExtField>{ML, L.neg(*e)}, g));
      }
      res.quad = ext;
    }
  }
  return res;
}

template <class K>
AutSweep reduced_aut_order(const FormOps<K>& ops, const HyperellipticCurve<K>& X, unsigned max_ext, uint64_t seed) {
  AutSweep s;
  if constexpr (!K::finite) {
    if (max_ext > 1) throw CapabilityError("geometric automorphisms over QQ are not supported");
    s.order = static_cast<long>(is_gl2_equiv_covariant(ops, X.f, X.f).size());
    s.counts = {s.order};
    (void)seed;
  } else {
    for (unsigned j = 1; j <= max_ext; ++j) {
      long c;
      if (j == 1) {
        c = static_cast<long>(is_gl2_equiv_covariant(ops, X.f, X.f).size());
      } else {
        auto ext = extension_of_degree(ops.field(), j, seed + j);
        FormOps<ExtField> opl(ext.field);
        Form<ExtField> fL{ext.embedding.map(X.f.a)};
        c = static_cast<long>(is_gl2_equiv_covariant(opl, fL, fL).size());
      }
      s.counts.push_back(c);
      if (c > s.order) s.order = c, s.ext = j;
    }
  }
  return s;
}

#define HYPERISO_HYP(K)                                                                                       \
  template HyperellipticCurve<K> make_curve<K>(const FormOps<K>&, Form<K>);                                   \
  template CurveIso<K> canonical_iso<K>(const FormOps<K>&, const CurveIso<K>&, int);                          \
  template Extension<K> extension_of_degree<K>(const K&, unsigned, uint64_t);                                 \
  template CurveIsomResult<K> curve_isoms<K>(const FormOps<K>&, const HyperellipticCurve<K>&,                 \
                                             const HyperellipticCurve<K>&, bool);                             \
  template AutSweep reduced_aut_order<K>(const FormOps<K>&, const HyperellipticCurve<K>&, unsigned, uint64_t);

HYPERISO_HYP(RationalField)
HYPERISO_HYP(PrimeField)
HYPERISO_HYP(ExtField)

}  // namespace hyperiso
