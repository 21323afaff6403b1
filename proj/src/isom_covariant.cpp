#include "hyperiso/covariant_isom.hpp"

namespace hyperiso {

namespace {

template <class K>
bool usable(const FormOps<K>& ops, const Form<K>& c) {
  return c.degree() >= 3 && !ops.is_zero(c) && ops.distinct_roots(c) >= 3;
}

template <class K>
Form<K> reduced(const FormOps<K>& ops, const Form<K>& c) {
  if (!ops.field().is_zero(ops.discriminant(c))) return c;
  return ops.squarefree_part(c);
}

}  // namespace

template <class K>
IsomResult<K> is_gl2_equiv_covariant(const FormOps<K>& ops, const Form<K>& f1, const Form<K>& f2,
                                     const CovariantSearchConfig& cfg, const FastOptions& fast) {
  const K& k = ops.field();
  if (f1.degree() != f2.degree()) throw PreconditionError("forms of different degrees");
  // root counts of f1, f2 are checked on the fallback path only
  if (f1.degree() < 3 || ops.is_zero(f1) || ops.is_zero(f2)) return is_gl2_equiv_fast(ops, f1, f2, fast);
  const int n = f1.degree();
  if (k.characteristic() != 0 && k.characteristic() <= 2 * n + 3) return is_gl2_equiv_fast(ops, f1, f2, fast);
  Rng rng(cfg.seed);
  CovariantEvaluator<K> ev1(ops, f1), ev2(ops, f2);
  for (int o = 3; o <= cfg.B_order; ++o) {
    if (n % 2 == 0 && o % 2) continue;
    for (int d = 2; d <= cfg.B_degree; ++d) {
      if ((n * d - o) % 2) continue;
      RecipePtr r;
      try {
        r = random_covariant(n, o, d, rng);
      } catch (const PreconditionError&) {
        continue;
      }
      auto c1 = ev1.eval(r), c2 = ev2.eval(r);
      std::string label = r->str();
      for (int s = 0;; ++s) {
        if (usable(ops, c1)) {
          IsomResult<K> res;
          res.method = label;
          if (ops.is_zero(c2) || ops.distinct_roots(c2) != ops.distinct_roots(c1)) return res;
          auto S = is_gl2_equiv_fast(ops, reduced(ops, c1), reduced(ops, c2), fast);
          std::vector<Moebius<K>> keep;
          for (auto& m : S.matrices)
            if (ops.is_proportional(ops.act(m, f1), f2)) keep.push_back(m);
          res = finalize_isoms(ops, f1, f2, keep);
          res.method = label;
          res.fallback = S.fallback;
          return res;
        }
        if (s >= cfg.B_singular) break;
        RecipePtr r2;
        try {
          r2 = random_covariant(n, o, d, rng);
        } catch (const PreconditionError&) {
          break;
        }
        auto kappa = K::finite ? k.random(rng) : k.from_int(1 + static_cast<long long>(rng() % 10));
        c1 = ops.add(c1, ops.scale(ev1.eval(r2), kappa));
        c2 = ops.add(c2, ops.scale(ev2.eval(r2), kappa));
        label += " + k " + r2->str();
      }
    }
  }
  return is_gl2_equiv_fast(ops, f1, f2, fast);
}

template IsomResult<RationalField> is_gl2_equiv_covariant<RationalField>(const FormOps<RationalField>&,
                                                                         const Form<RationalField>&,
                                                                         const Form<RationalField>&,
                                                                         const CovariantSearchConfig&,
                                                                         const FastOptions&);
template IsomResult<PrimeField> is_gl2_equiv_covariant<PrimeField>(const FormOps<PrimeField>&,
                                                                   const Form<PrimeField>&, const Form<PrimeField>&,
                                                                   const CovariantSearchConfig&, const FastOptions&);
template IsomResult<ExtField> is_gl2_equiv_covariant<ExtField>(const FormOps<ExtField>&, const Form<ExtField>&,
                                                               const Form<ExtField>&, const CovariantSearchConfig&,
                                                               const FastOptions&);

}  // namespace hyperiso
