#include "hyperiso/moduli.hpp"

#include "hyperiso/roots.hpp"

namespace hyperiso {

std::vector<RecipePtr> default_invariants(int n) {
  auto F = Recipe::leaf();
  auto tv = [](RecipePtr a, RecipePtr b, int h) { return Recipe::tv(std::move(a), std::move(b), h); };
  if (n == 4) return {tv(F, F, 4), tv(tv(F, F, 2), F, 4)};
  if (n == 6) {
    auto i = tv(F, F, 4);
    auto y1 = tv(F, i, 4), y2 = tv(i, y1, 2), y3 = tv(i, y2, 2);
    return {tv(F, F, 6), tv(i, i, 4), tv(tv(i, i, 2), i, 4), tv(y1, y3, 2)};
  }
  if (n == 8) {
    auto g = tv(F, F, 4), k = tv(F, F, 6);
    auto h = tv(k, k, 2), m = tv(F, k, 4), nn = tv(F, h, 4), p = tv(g, k, 4), q = tv(g, h, 4);
    return {tv(F, F, 8), tv(F, g, 8), tv(k, k, 4), tv(m, k, 4), tv(k, h, 4),
            tv(m, h, 4), tv(p, h, 4), tv(nn, h, 4), tv(q, h, 4)};
  }
  throw PreconditionError("no shipped invariant list for degree " + std::to_string(n));
}

template <class K>
InvariantTuple<K> invariant_profile(const FormOps<K>& ops, const Form<K>& f, const std::vector<RecipePtr>& recipes) {
  InvariantTuple<K> t;
  CovariantEvaluator<K> ev(ops, f);
  for (auto& r : recipes) {
    if (r->order(f.degree()) != 0) throw PreconditionError("not an invariant: " + r->str());
    auto c = ev.eval(r);
    t.values.push_back(c.a[0]);
    t.degrees.push_back(r->degree());
  }
  return t;
}

template <class K>
ModuliPoint<K> field_of_moduli(const FormOps<K>& ops, const Form<K>& f, const std::vector<RecipePtr>& recipes) {
  const K& k = ops.field();
  auto t = invariant_profile(ops, f, recipes);
  ModuliPoint<K> pt;
  pt.representative = canonical_representative(k, t.values, t.degrees);
  pt.degrees = t.degrees;
  if constexpr (std::is_same_v<K, ExtField>) {
    const unsigned r = k.degree();
    for (unsigned s = 1; s <= r; ++s) {
      if (r % s) continue;
      bool fixed = true;
      for (auto& c : pt.representative) fixed = fixed && k.frobenius(c, s) == c;
      if (fixed) {
        pt.field_degree = s;
        break;
      }
    }
    FieldDesc d;
    d.characteristic = k.characteristic();
    d.degree = pt.field_degree;
    if (pt.field_degree == r) {
      d.modulus = std::vector<mpz_class>(k.modulus().begin(), k.modulus().end());
    } else if (pt.field_degree > 1) {
      // some modulus for F_{p^s}
      Rng rng(1);
      auto m = random_irreducible(k.base(), pt.field_degree, rng);
      d.modulus.assign(m.begin(), m.end());
    }
    pt.field = d;
  } else {
    pt.field = k.desc();
  }
  return pt;
}

#define HYPERISO_MODULI(K)                                                                                  \
  template InvariantTuple<K> invariant_profile<K>(const FormOps<K>&, const Form<K>&,                        \
                                                  const std::vector<RecipePtr>&);                           \
  template ModuliPoint<K> field_of_moduli<K>(const FormOps<K>&, const Form<K>&, const std::vector<RecipePtr>&);

HYPERISO_MODULI(RationalField)
HYPERISO_MODULI(PrimeField)
HYPERISO_MODULI(ExtField)

}  // namespace hyperiso
