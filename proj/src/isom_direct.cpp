#include <algorithm>
#include <numeric>

#include "hyperiso/isom.hpp"
#include "hyperiso/number_theory.hpp"
#include "hyperiso/roots.hpp"

namespace hyperiso {

namespace {

template <class K>
typename K::Elem falling(const K& k, long a, long b) {
  auto r = k.one();
  for (long u = 0; u < b; ++u) r = k.mul(r, k.from_int(a - u));
  return r;
}

template <class K>
typename K::Elem factorial(const K& k, long n) {
  return falling(k, n, n);
}

// d^(jx + jz) f / dx^jx dz^jz
template <class K>
Form<K> partial(const K& k, const Form<K>& f, int jx, int jz) {
  const int n = f.degree(), m = n - jx - jz;
  Form<K> out{std::vector<typename K::Elem>(m + 1, k.zero())};
  for (int i = 0; i <= m; ++i) {
    const auto& c = f.a[i + jx];
    if (k.is_zero(c)) continue;
    out.a[i] = k.mul(c, k.mul(falling(k, i + jx, jx), falling(k, n - i - jx, jz)));
  }
  return out;
}

// G(1, gamma) as a polynomial in gamma
template <class K>
typename PolyRing<K>::P at_one(const K& k, const Form<K>& g) {
  std::vector<typename K::Elem> p(g.a.rbegin(), g.a.rend());
  return trimmed(k, std::move(p));
}

template <class K>
bool char_divides(const K& k, long n) {
  const auto p = k.characteristic();
  return p != 0 && mpz_class(n) % p == 0;
}

template <class K>
bool char_at_most(const K& k, long n) {
  const auto p = k.characteristic();
  return p != 0 && p <= n;
}

template <class K>
mpz_class pgl2_size(const K& k) {
  mpz_class q = k.size();
  return q * (q * q - 1);
}

// Solutions N of g1 ~ f2 o N with N(1 : 0) = (1 : gamma) and F_x(1, gamma) != 0.
// Returns false when the relation system gave no information.
template <class K>
bool solve_shape(const FormOps<K>& ops, const Form<K>& A, const Form<K>& f2, int imax, std::vector<Moebius<K>>& out) {
  const K& k = ops.field();
  const PolyRing<K>& R = ops.ring();
  const int n = A.degree();
  auto sys = gamma_system(ops, f2, A, imax);
  auto G = candidate_gammas(ops, sys, A);
  if (G.empty()) return false;
  auto Fx = at_one(k, partial(k, f2, 1, 0));
  auto Fz = at_one(k, partial(k, f2, 0, 1));
  const auto& An = A.a[n];
  for (auto& gamma : roots_in_field(R, G)) {
    auto fx = R.eval(Fx, gamma);
    if (k.is_zero(fx)) continue;
    auto beta0 = k.neg(k.div(R.eval(Fz, gamma), fx));
    Moebius<K> B{k.one(), beta0, gamma, k.one()};
    if (k.is_zero(ops.det(B))) continue;
    auto g = ops.substitute(f2, B);
    const auto& gn = g.a[n];
    if (k.is_zero(gn)) continue;
    // delta^j = g_n A_{n-j} / (A_n g_{n-j}) for A_{n-j} != 0
    long d = 0;
    typename K::Elem dd = k.one();
    bool ok = true;
    std::vector<std::pair<long, typename K::Elem>> ratios;
    for (int j = 2; j <= n && ok; ++j) {
      if (k.is_zero(A.a[n - j])) continue;
      if (k.is_zero(g.a[n - j])) {
        ok = false;
        break;
      }
      auto r = k.div(k.mul(gn, A.a[n - j]), k.mul(An, g.a[n - j]));
      ratios.push_back({j, r});
      if (d == 0) {
        d = j, dd = r;
      } else {
        long long u, v;
        long long gg = nt::ext_gcd(d, j, u, v);
        dd = k.mul(power(k, dd, u), power(k, r, v));
        d = gg;
      }
    }
    if (!ok || d == 0) continue;
    for (auto& [j, r] : ratios)
      if (power(k, dd, static_cast<long long>(j / d)) != r) ok = false;
    if (!ok) continue;
    auto root = nth_root(k, dd, static_cast<unsigned long>(d));
    if (!root) continue;
    for (auto& zeta : roots_of_unity(k, static_cast<unsigned long>(d))) {
      auto delta = k.mul(*root, zeta);
      // g o diag(1, delta)
      Form<K> h = g;
      auto pw = k.one();
      for (int i = n; i >= 0; --i) {
        h.a[i] = k.mul(h.a[i], pw);
        pw = k.mul(pw, delta);
      }
      if (ops.is_proportional(h, A)) out.push_back(Moebius<K>{k.one(), k.mul(beta0, delta), gamma, delta});
    }
  }
  return true;
}

}  // namespace

template <class K>
std::vector<typename K::Elem> field_elements(const K& k) {
  std::vector<typename K::Elem> out;
  if constexpr (std::is_same_v<K, PrimeField>) {
    for (uint64_t a = 0; a < k.p(); ++a) out.push_back(a);
  } else if constexpr (std::is_same_v<K, ExtField>) {
    const uint64_t q = k.size().get_ui();
    for (uint64_t idx = 0; idx < q; ++idx) {
      std::vector<uint64_t> c(k.degree());
      uint64_t t = idx;
      for (auto& x : c) x = t % k.p(), t /= k.p();
      out.push_back(k.from_coeffs(c));
    }
  } else {
    throw CapabilityError("cannot enumerate an infinite field");
  }
  return out;
}

template <class K>
void check_isom_input(const FormOps<K>& ops, const Form<K>& f) {
  if (f.degree() < 3) throw PreconditionError("isomorphism search needs degree >= 3");
  if (ops.is_zero(f)) throw PreconditionError("zero form");
  if (ops.distinct_roots(f) < 3) throw PreconditionError("form has fewer than 3 distinct roots");
}

template <class K>
Normalized<K> normalize_input(const FormOps<K>& ops, const Form<K>& f) {
  const K& k = ops.field();
  const int n = f.degree();
  if (char_divides(k, n)) throw CharacteristicObstruction("normalization needs p not dividing n");
  Moebius<K> N = ops.identity();
  Form<K> g = f;
  if (k.is_zero(f.a[n])) {
    bool found = false;
    auto try_t = [&](const typename K::Elem& t) {
      if (k.is_zero(ops.eval(f, k.one(), t))) return false;
      N = Moebius<K>{k.one(), k.zero(), t, k.one()};
      return true;
    };
    if constexpr (K::finite) {
      if (k.size() <= 4096) {
        for (auto& t : field_elements(k))
          if (!k.is_zero(t) && try_t(t)) {
            found = true;
            break;
          }
      } else {
        for (long t = 1; t <= 2 * n + 2 && !found; ++t) found = try_t(k.from_int(t));
      }
    } else {
      for (long t = 1; !found; ++t) found = try_t(k.from_int(t));
    }
    if (!found) throw PreconditionError("normalization: every rational point is a root");
    g = ops.substitute(f, N);
  }
  auto s = k.neg(k.div(g.a[n - 1], k.mul(k.from_int(n), g.a[n])));
  Moebius<K> N2{k.one(), s, k.zero(), k.one()};
  g = ops.substitute(g, N2);
  return Normalized<K>{g, ops.mat_inv(ops.mat_mul(N, N2))};
}

template <class K>
GammaSystem<K> gamma_system(const FormOps<K>& ops, const Form<K>& f2, const Form<K>& A, int imax) {
  const K& k = ops.field();
  const PolyRing<K>& R = ops.ring();
  const int n = A.degree();
  if (f2.degree() != n) throw PreconditionError("gamma_system: degree mismatch");
  imax = std::min(imax, n);
  while (imax >= 2 && char_at_most(k, imax)) --imax;
  GammaSystem<K> sys;
  sys.L.assign(std::max(imax + 1, 2), {});
  if (imax < 2) return sys;
  auto Fx = at_one(k, partial(k, f2, 1, 0));
  auto mFz = R.neg(at_one(k, partial(k, f2, 0, 1)));
  auto F = at_one(k, f2);
  std::vector<typename PolyRing<K>::P> px{R.constant(k.one())}, pz{R.constant(k.one())};
  for (int i = 1; i <= imax; ++i) {
    px.push_back(R.mul(px.back(), Fx));
    pz.push_back(R.mul(pz.back(), mFz));
  }
  bool all_div = true;
  std::vector<typename PolyRing<K>::P> raw(imax + 1);
  for (int i = 2; i <= imax; ++i) {
    typename PolyRing<K>::P acc;
    auto binom = k.one();
    for (int j = 0; j <= i; ++j) {
      if (j > 0) binom = k.div(k.mul(binom, k.from_int(i - j + 1)), k.from_int(j));
      auto D = at_one(k, partial(k, f2, j, i - j));
      if (D.empty()) continue;
      acc = R.add(acc, R.scale(R.mul(R.mul(pz[j], px[i - j]), D), binom));
    }
    raw[i] = R.scale(acc, A.a[n]);
    if (all_div && !raw[i].empty() && !F.empty() && !R.divrem(raw[i], F).second.empty()) all_div = false;
  }
  sys.divided.assign(imax + 1, all_div);
  for (int i = 2; i <= imax; ++i) sys.L[i] = all_div && !F.empty() ? R.quo(raw[i], F) : raw[i];
  sys.F = F;
  return sys;
}

template <class K>
typename PolyRing<K>::P candidate_gammas(const FormOps<K>& ops, const GammaSystem<K>& sys, const Form<K>& A) {
  const K& k = ops.field();
  const PolyRing<K>& R = ops.ring();
  const int n = A.degree(), imax = static_cast<int>(sys.L.size()) - 1;
  const bool divided = imax >= 2 && sys.divided[2];
  std::vector<typename PolyRing<K>::P> rel;
  int i0 = -1;
  for (int i = 2; i <= imax; ++i) {
    const auto& ai = A.a[n - i];
    if (k.is_zero(ai)) {
      rel.push_back(sys.L[i]);
      continue;
    }
    if (i0 < 0) {
      i0 = i;
      continue;
    }
    const long g = std::gcd(i0, i);
    const unsigned e0 = static_cast<unsigned>(i / g), e1 = static_cast<unsigned>(i0 / g);
    auto c0 = power(k, k.mul(factorial(k, i), ai), static_cast<long long>(e1));
    auto c1 = power(k, k.mul(factorial(k, i0), A.a[n - i0]), static_cast<long long>(e0));
    auto t0 = R.scale(R.pow(sys.L[i0], e0), c0);
    auto t1 = R.scale(R.pow(sys.L[i], e1), c1);
    if (!divided) {
      t0 = R.mul(t0, R.pow(sys.F, e1));
      t1 = R.mul(t1, R.pow(sys.F, e0));
    }
    rel.push_back(R.sub(t0, t1));
  }
  typename PolyRing<K>::P G;
  for (auto& r : rel) {
    if (r.empty()) continue;
    G = G.empty() ? R.monic(r) : R.gcd(G, r);
    if (R.deg(G) <= 1) break;
  }
  return G;
}

template <class K>
IsomResult<K> finalize_isoms(const FormOps<K>& ops, const Form<K>& f1, const Form<K>& f2,
                             const std::vector<Moebius<K>>& ms) {
  std::vector<Moebius<K>> v;
  for (auto& m : ms) v.push_back(ops.projective_normal(m));
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return ops.proj_less(a, b); });
  v.erase(std::unique(v.begin(), v.end(), [&](const auto& a, const auto& b) { return ops.proj_equal(a, b); }),
          v.end());
  IsomResult<K> res;
  for (auto& m : v) {
    auto lam = ops.is_proportional(ops.act(m, f1), f2);
    if (!lam) throw Error("isomorphism failed verification: " + ops.mat_str(m));
    res.matrices.push_back(m);
    res.scalars.push_back(*lam);
  }
  return res;
}

template <class K>
IsomResult<K> oracle_isom(const FormOps<K>& ops, const Form<K>& f1, const Form<K>& f2, unsigned long limit) {
  const K& k = ops.field();
  if constexpr (!K::finite) {
    (void)k, (void)f1, (void)f2, (void)limit;
    throw CapabilityError("oracle_isom needs a finite field");
  } else {
    if (pgl2_size(k) > limit) throw CapabilityError("oracle_isom: field too large");
    if (f1.degree() != f2.degree()) return {};
    auto elems = field_elements(k);
    std::vector<Moebius<K>> found;
    auto test = [&](const Moebius<K>& N) {
      // act(M, f1) = f1 o N for M = N^-1
      if (ops.is_proportional(ops.substitute_naive(f1, N), f2)) found.push_back(ops.mat_inv(N));
    };
    for (auto& b : elems)
      for (auto& c : elems)
        for (auto& d : elems)
          if (!k.is_zero(k.sub(d, k.mul(b, c)))) test(Moebius<K>{k.one(), b, c, d});
    for (auto& c : elems)
      for (auto& d : elems)
        if (!k.is_zero(c)) test(Moebius<K>{k.zero(), k.one(), c, d});
    auto res = finalize_isoms(ops, f1, f2, found);
    res.fallback = true;
    res.method = "oracle";
    return res;
  }
}

template <class K>
IsomResult<K> is_gl2_equiv_fast(const FormOps<K>& ops, const Form<K>& f1, const Form<K>& f2, const FastOptions& opt) {
  const K& k = ops.field();
  if (f1.degree() != f2.degree()) throw PreconditionError("forms of different degrees");
  check_isom_input(ops, f1);
  check_isom_input(ops, f2);
  const int n = f1.degree();
  auto fallback = [&](const char* why) -> IsomResult<K> {
    if constexpr (K::finite) {
      if (opt.allow_fallback && pgl2_size(k) <= opt.fallback_limit) return oracle_isom(ops, f1, f2, opt.fallback_limit);
    }
    throw CapabilityError(std::string("direct method unavailable: ") + why);
  };
  if (k.characteristic() == 2) return fallback("characteristic 2");
  if (char_divides(k, n)) return fallback("p divides n");
  Normalized<K> nf;
  try {
    nf = normalize_input(ops, f1);
  } catch (const PreconditionError&) {
    return fallback("no normalizing point");
  }
  // shapes S with the points S^-1(0 : 1) distinct and S^-1(1 : 0) distinct
  const Moebius<K> shapes[3] = {ops.identity(), ops.mat(0, 1, 1, 0), ops.mat(1, 1, 1, -1)};
  std::vector<Moebius<K>> all;
  for (const auto& S : shapes) {
    std::vector<Moebius<K>> sols;
    auto f2s = ops.act(S, f2);
    bool informative = solve_shape(ops, nf.g, f2s, opt.imax, sols);
    if (!informative && opt.imax < 8) informative = solve_shape(ops, nf.g, f2s, 8, sols);
    if (!informative) return fallback("relations vanish identically");
    auto Sinv = ops.mat_inv(S);
    for (auto& N : sols) all.push_back(ops.mat_mul(ops.mat_mul(Sinv, N), nf.T));
  }
  auto res = finalize_isoms(ops, f1, f2, all);
  res.method = "fast";
  return res;
}

#define HYPERISO_ISOM(K)                                                                                           \
  template std::vector<K::Elem> field_elements<K>(const K&);                                                       \
  template void check_isom_input<K>(const FormOps<K>&, const Form<K>&);                                            \
  template Normalized<K> normalize_input<K>(const FormOps<K>&, const Form<K>&);                                    \
  template GammaSystem<K> gamma_system<K>(const FormOps<K>&, const Form<K>&, const Form<K>&, int);                 \
  template PolyRing<K>::P candidate_gammas<K>(const FormOps<K>&, const GammaSystem<K>&, const Form<K>&);           \
  template IsomResult<K> finalize_isoms<K>(const FormOps<K>&, const Form<K>&, const Form<K>&,                      \
                                           const std::vector<Moebius<K>>&);                                        \
  template IsomResult<K> oracle_isom<K>(const FormOps<K>&, const Form<K>&, const Form<K>&, unsigned long);         \
  template IsomResult<K> is_gl2_equiv_fast<K>(const FormOps<K>&, const Form<K>&, const Form<K>&, const FastOptions&);

HYPERISO_ISOM(RationalField)
HYPERISO_ISOM(PrimeField)
HYPERISO_ISOM(ExtField)

}  // namespace hyperiso
