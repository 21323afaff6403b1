#include "hyperiso/descent.hpp"

#include <algorithm>

#include "hyperiso/number_theory.hpp"
#include "hyperiso/roots.hpp"

namespace hyperiso {

namespace {

using EM = Moebius<ExtField>;
using EF = Form<ExtField>;

EM closure(const FormOps<ExtField>& ops, const EM& M, unsigned s, unsigned m) {
  EM C = M;
  for (unsigned j = 1; j < m; ++j) C = ops.mat_mul(ops.mat_frobenius(M, s * j), C);
  return C;
}

std::optional<Cocycle> cocycle_over(const ExtField& top, const EF& f, unsigned s, bool enlarged, bool& any_isom) {
  FormOps<ExtField> ops(top);
  const unsigned m = top.degree() / s;
  Cocycle c{top, s, f, {}, enlarged};
  if (m == 1) {
    c.maps = {ops.identity()};
    return c;
  }
  auto isoms = is_gl2_equiv_covariant(ops, f, ops.frobenius(f, s));
  any_isom = any_isom || !isoms.empty();
  const mpz_class Q = nt::ipow(top.characteristic(), s);
  const mpz_class e = (nt::ipow(Q, m) - 1) / (Q - 1);
  for (const auto& M0 : isoms.matrices) {
    auto C = closure(ops, M0, s, m);
    if (!ops.is_scalar(C)) continue;
    // scale M0 by lambda with N(lambda) = c^-1
    auto cinv = top.inv(C.m11);
    std::optional<ExtField::Elem> lam;
    if (top.is_one(cinv)) lam = top.one();
    else if (e.fits_ulong_p()) lam = nth_root(top, cinv, e.get_ui());
    if (!lam) continue;
    auto M = ops.mat_scale(M0, *lam);
    c.maps = {ops.identity(), M};
    for (unsigned j = 2; j < m; ++j) c.maps.push_back(ops.mat_mul(ops.mat_frobenius(c.maps[j - 1], s), M));
    verify_cocycle(c);
    return c;
  }
  return std::nullopt;
}

}  // namespace

void verify_cocycle(const Cocycle& c) {
  FormOps<ExtField> ops(c.top);
  const unsigned m = c.top.degree() / c.s;
  if (c.maps.size() != m) throw Error("cocycle: wrong number of maps");
  if (!(c.maps[0] == ops.identity())) throw Error("cocycle: M_id is not the identity");
  if (m == 1) return;
  const auto& M = c.maps[1];
  if (!ops.is_proportional(ops.act(M, c.f), ops.frobenius(c.f, c.s))) throw Error("cocycle: M_sigma is not in Isom");
  for (unsigned j = 1; j + 1 < m; ++j)
    if (!(c.maps[j + 1] == ops.mat_mul(ops.mat_frobenius(c.maps[j], c.s), M))) throw Error("cocycle relation fails");
  if (!(ops.mat_mul(ops.mat_frobenius(c.maps[m - 1], c.s), M) == ops.identity())) throw Error("cocycle: no closure");
}

std::optional<Cocycle> build_cocycle(const ExtField& k, const Form<ExtField>& f, unsigned s) {
  if (s == 0 || k.degree() % s) throw PreconditionError("build_cocycle: s must divide the field degree");
  if (k.characteristic() == 2) throw CharacteristicObstruction("build_cocycle: characteristic 2");
  FormOps<ExtField> ops(k);
  check_isom_input(ops, f);
  bool any_isom = false;
  if (auto c = cocycle_over(k, f, s, false, any_isom)) return c;
  auto ext = extension_of_degree(k, 2, 7);
  EF fL{ext.embedding.map(f.a)};
  auto c = cocycle_over(ext.field, fL, s, true, any_isom);
  if (!any_isom) throw PreconditionError("f and its conjugate are not equivalent: the invariants do not descend");
  return c;
}

Descent hilbert90_descend(const Cocycle& c, uint64_t seed, int budget) {
  verify_cocycle(c);
  const ExtField& top = c.top;
  FormOps<ExtField> ops(top);
  const unsigned m = top.degree() / c.s;
  const bool trivial = std::all_of(c.maps.begin(), c.maps.end(), [&](const EM& M) { return M == ops.identity(); });
  Rng rng(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    EM P = trivial ? ops.identity() : EM{top.random(rng), top.random(rng), top.random(rng), top.random(rng)};
    EM A = trivial ? P : EM{top.zero(), top.zero(), top.zero(), top.zero()};
    for (unsigned j = 0; j < m && !trivial; ++j) {
      auto T = ops.mat_mul(ops.mat_frobenius(P, c.s * j), c.maps[j]);
      A = EM{top.add(A.m11, T.m11), top.add(A.m12, T.m12), top.add(A.m21, T.m21), top.add(A.m22, T.m22)};
    }
    if (top.is_zero(ops.det(A))) continue;
    if (m > 1 && !(ops.mat_mul(ops.mat_inv(ops.mat_frobenius(A, c.s)), A) == c.maps[1]))
      throw Error("hilbert90: (A^sigma)^-1 A differs from M_sigma");
    auto h = ops.act(A, c.f);
    auto model_top = ops.normalize(h);
    if (!(ops.frobenius(model_top, c.s) == model_top)) throw Error("hilbert90: model not fixed by sigma");
    auto nu = ops.is_proportional(model_top, h);
    if (!nu) throw Error("hilbert90: normalization lost proportionality");
    ExtField sub = c.s == 1 ? ExtField(top.p(), {0, 1}) : make_gf(top.p(), c.s, seed);
    auto emb = embed_into(sub, top);
    EF model;
    for (auto& a : model_top.a) {
      auto pre = emb.preimage(a);
      if (!pre) throw Error("hilbert90: coefficient outside the subfield");
      model.a.push_back(*pre);
    }
    return Descent{A, model_top, sub, model, !nth_root(top, *nu, 2).has_value()};
  }
  throw Error("hilbert90: no invertible average within the retry budget");
}

std::vector<RecipePtr> descent_covariants(int genus) {
  const int n = 2 * genus + 2;
  using namespace recipes;
  if (genus == 3) return {c24(8), c34(8), c44(), c44p(), c54()};
  if (genus == 2) {
    auto l = stratum_covariants(2, "D4").recipes;
    return l;
  }
  return {c24(n), c34(n)};
}

template <class K>
CovariantDescent<K> covariant_descend(const FormOps<K>& ops, const HyperellipticCurve<K>& X, uint64_t seed) {
  const K& k = ops.field();
  CovariantDescent<K> out;
  const int n = X.f.degree();
  auto recipes = descent_covariants(X.genus);
  Rng rng(seed);
  for (int d = 4; d <= 8; ++d) {
    if ((n * d) % 2) continue;
    try {
      recipes.push_back(random_covariant(n, 4, d, rng));
    } catch (const PreconditionError&) {
    }
  }
  CovariantEvaluator<K> ev(ops, X.f);
  for (auto& r : recipes) {
    Form<K> c;
    try {
      c = ev.eval(r);
    } catch (const PreconditionError&) {
      continue;
    }
    if (c.degree() != 4 || ops.is_zero(c)) continue;
    auto [I, J] = quartic_IJ(k, c);
    if (k.is_zero(ops.discriminant(c)) || k.is_zero(I) || k.is_zero(J)) continue;
    out.found = true;
    out.covariant = r->str();
    out.c = c;
    out.I = I, out.J = J;
    out.target = quartic_from_IJ(k, I, J);
    break;
  }
  if (!out.found) {
    out.diagnostic = "no order 4 covariant with nonzero discriminant, I and J";
    return out;
  }
  PolyRing<K> R(k);
  auto dc = ops.dehomogenize(out.c);
  std::optional<std::pair<typename K::Elem, typename K::Elem>> root;
  if (R.deg(dc) < 4) {
    root = std::make_pair(k.one(), k.zero());
  } else if (auto rs = roots_in_field(R, dc, seed); !rs.empty()) {
    root = std::make_pair(rs.front(), k.one());
  }
  if (root) {
    auto A = quartic_iso_at_root(ops, out.c, root->first, root->second);
    out.A = A;
    out.model = ops.normalize(ops.act(A, X.f));
    return out;
  }
  if constexpr (!K::finite) {
    throw CapabilityError("covariant_descend over QQ needs a rational root of the covariant");
  } else {
    auto ri = quartic_iso_over_root_field(ops, out.c, seed);
    const ExtField& L = ri.ext.field;
    FormOps<ExtField> opl(L);
    EF fL{ri.ext.embedding.map(X.f.a)};
    auto h = opl.normalize(opl.act(ri.M, fL));
    out.root_degree = ri.degree;
    const unsigned r = k.degree();
    for (unsigned s = 1; s <= ri.degree; ++s) {
      if (ri.degree % s) continue;
      bool fixed = true;
      for (auto& a : h.a) fixed = fixed && L.frobenius(a, r * s) == a;
      if (fixed) {
        out.ext_degree = s;
        break;
      }
    }
    if (out.ext_degree == 1) {
      Form<K> model;
      for (auto& a : h.a) model.a.push_back(*ri.ext.embedding.preimage(a));
      out.model = model;
    }
    out.model_ext = h;
    out.root_iso = ri;
    return out;
  }
}

namespace {

std::vector<uint64_t> cubic_roots(const PrimeField& k) {
  PolyRing<PrimeField> R(k);
  auto rs = roots_in_field(R, {1, k.from_int(-3), 0, 1});
  if (rs.size() != 3) throw PreconditionError("t^3 - 3t + 1 does not split modulo p");
  return rs;
}

}  // namespace

Form<PrimeField> genus5_family_form(const mpq_class& q4, const mpq_class& q5, const mpq_class& q6, uint64_t p,
                                    const FamilyOrientation& o) {
  PrimeField k(p);
  FormOps<PrimeField> ops(k);
  auto rs = cubic_roots(k);
  for (int i = 0; i < o.perm; ++i) std::next_permutation(rs.begin(), rs.end());
  const auto r1 = rs[0], r2 = rs[1], r3 = rs[2];
  const auto ratio = k.div(k.sub(r3, r1), k.sub(r3, r2));
  Form<PrimeField> f{{1}};
  for (const auto& qi : {q4, q5, q6}) {
    auto a = k.from_rational(qi), den = k.sub(k.from_rational(o.printed_denominator ? q4 : qi), r1);
    if (k.is_zero(den)) throw PreconditionError("degenerate family parameters");
    auto w = k.sub(1, k.mul(2, k.mul(ratio, k.div(k.sub(a, r2), den))));
    f = ops.mul(f, Form<PrimeField>{{1, 0, k.neg(k.mul(2, w)), 0, 1}});
  }
  if (k.is_zero(ops.discriminant(f))) throw PreconditionError("degenerate family parameters");
  return f;
}

Form<PrimeField> genus5_family_descend(const mpq_class& q4, const mpq_class& q5, const mpq_class& q6, uint64_t p,
                                       const FamilyOrientation& o) {
  PrimeField k(p);
  FormOps<PrimeField> ops(k);
  auto X = make_curve(ops, genus5_family_form(q4, q5, q6, p, o));
  auto d = covariant_descend(ops, X);
  if (!d.found) throw Error("genus 5 family: " + d.diagnostic);
  if (!d.model) throw Error("genus 5 family: model needs an extension of degree " + std::to_string(d.ext_degree));
  return *d.model;
}

template CovariantDescent<RationalField> covariant_descend<RationalField>(const FormOps<RationalField>&,
                                                                          const HyperellipticCurve<RationalField>&,
                                                                          uint64_t);
template CovariantDescent<PrimeField> covariant_descend<PrimeField>(const FormOps<PrimeField>&,
                                                                    const HyperellipticCurve<PrimeField>&, uint64_t);
template CovariantDescent<ExtField> covariant_descend<ExtField>(const FormOps<ExtField>&,
                                                                const HyperellipticCurve<ExtField>&, uint64_t);

}  // namespace hyperiso
