#include "hyperiso/roots.hpp"

#include <algorithm>
#include <map>

namespace hyperiso {

namespace {

template <class K>
using PolyOf = typename PolyRing<K>::P;

// (x + a)^((q-1)/2) - 1 style splitting; trace map in characteristic 2
template <class K>
PolyOf<K> splitting_element(const PolyRing<K>& R, const PolyOf<K>& g, unsigned d, Rng& rng) {
  const K& k = R.field();
  PolyOf<K> a = R.random(R.deg(g) - 1, rng, false);
  if (R.deg(a) < 1) a = R.add(R.x(), a);
  const mpz_class q = k.size();
  if (k.characteristic() == 2) {
    // T(a) = sum_{i < e d} a^{2^i}, q = 2^e
    size_t e = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;
    PolyOf<K> t = a, cur = a;
    for (size_t i = 1; i < e * d; ++i) {
      cur = R.mulmod(cur, cur, g);
      t = R.add(t, cur);
    }
    return t;
  }
  mpz_class ex = (nt::ipow(q, d) - 1) / 2;
  PolyOf<K> b = R.powmod(a, ex, g);
  return R.sub(b, R.constant(k.one()));
}

// split squarefree g whose irreducible factors all have degree d
template <class K>
void equal_degree_split(const PolyRing<K>& R, const PolyOf<K>& g, unsigned d, Rng& rng, std::vector<PolyOf<K>>& out) {
  if (R.deg(g) <= 0) return;
  if (R.deg(g) == static_cast<long>(d)) {
    out.push_back(R.monic(g));
    return;
  }
  for (;;) {
    PolyOf<K> h = R.gcd(splitting_element(R, g, d, rng), g);
    if (R.deg(h) > 0 && R.deg(h) < R.deg(g)) {
      equal_degree_split(R, h, d, rng, out);
      equal_degree_split(R, R.divexact(g, h), d, rng, out);
      return;
    }
  }
}

template <class K>
std::vector<typename K::Elem> finite_roots(const PolyRing<K>& R, const PolyOf<K>& a, uint64_t seed) {
  const K& k = R.field();
  PolyOf<K> f = R.monic(a);
  if (R.deg(f) <= 0) return {};
  std::vector<typename K::Elem> res;
  // strip the root 0 so that x^q - x reduces to x^{q-1} - 1 cleanly
  if (k.is_zero(f[0])) {
    res.push_back(k.zero());
    size_t z = 0;
    while (z < f.size() && k.is_zero(f[z])) ++z;
    f.erase(f.begin(), f.begin() + z);
  }
  if (R.deg(f) > 0) {
    PolyOf<K> xq = R.powmod(R.x(), k.size(), f);
    PolyOf<K> g = R.gcd(R.sub(xq, R.x()), f);
    Rng rng(seed);
    std::vector<PolyOf<K>> lin;
    equal_degree_split(R, g, 1, rng, lin);
    for (auto& l : lin) res.push_back(k.neg(l[0]));
  }
  std::sort(res.begin(), res.end());
  return res;
}

std::vector<mpq_class> rational_roots(const PolyRing<RationalField>& R, const PolyOf<RationalField>& a) {
  if (a.empty()) throw PreconditionError("roots of the zero polynomial");
  std::vector<mpq_class> res;
  PolyOf<RationalField> f = squarefree_part(R, a);
  if (R.deg(f) <= 0) return res;
  if (f[0] == 0) {
    res.push_back(0);
    f.erase(f.begin());
  }
  if (R.deg(f) <= 0) return res;
  // primitive integer model
  mpz_class den = 1;
  for (auto& c : f) den = lcm(den, c.get_den());
  std::vector<mpz_class> g(f.size());
  mpz_class cont = 0;
  for (size_t i = 0; i < f.size(); ++i) {
    g[i] = f[i].get_num() * (den / f[i].get_den());
    cont = gcd(cont, g[i]);
  }
  for (auto& c : g) c /= cont;
  const mpz_class lc = g.back();
  mpz_class bound = 2 * abs(lc) * abs(g[0]) + 1;
  if (R.deg(f) == 1) {
    res.push_back(mpq_class(-g[0], g[1]));
    res.back().canonicalize();
    std::sort(res.begin(), res.end());
    return res;
  }
  // a prime keeping the degree and squarefreeness
  uint64_t p = (uint64_t{1} << 20) + 7;
  for (;; p += 2) {
    if (!nt::is_prime(p) || mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    PrimeField fp(p);
    PolyRing<PrimeField> Rp(fp);
    std::vector<uint64_t> gp(g.size());
    for (size_t i = 0; i < g.size(); ++i) gp[i] = fp.from_mpz(g[i]);
    if (Rp.deg(Rp.gcd(gp, Rp.derivative(gp))) == 0) break;
  }
  PrimeField fp(p);
  PolyRing<PrimeField> Rp(fp);
  std::vector<uint64_t> gp(g.size());
  for (size_t i = 0; i < g.size(); ++i) gp[i] = fp.from_mpz(g[i]);
  auto eval_mod = [&](const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& m) {
    mpz_class r = 0;
    for (size_t i = c.size(); i-- > 0;) r = (r * x + c[i]) % m;
    return r;
  };
  std::vector<mpz_class> dg(g.size() - 1);
  for (size_t i = 1; i < g.size(); ++i) dg[i - 1] = g[i] * static_cast<unsigned long>(i);
  const mpz_class P = mpz_class(static_cast<unsigned long>(p));
  for (uint64_t r0 : finite_roots(Rp, gp, 7)) {
    mpz_class r = static_cast<unsigned long>(r0), m = P;
    while (m <= bound) {
      m *= m;
      mpz_class num = eval_mod(g, r, m), d = eval_mod(dg, r, m), di;
      mpz_invert(di.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
      r = (r - num * di) % m;
      if (r < 0) r += m;
    }
    mpz_class c = lc * r % m;
    if (c < 0) c += m;
    if (c > m / 2) c -= m;
    mpq_class cand(c, lc);
    cand.canonicalize();
    if (R.eval(f, cand) == 0) res.push_back(cand);
  }
  std::sort(res.begin(), res.end());
  res.erase(std::unique(res.begin(), res.end()), res.end());
  return res;
}

// element of exact multiplicative order d (d | q - 1)
template <class K>
typename K::Elem element_of_order(const K& k, const mpz_class& d, Rng& rng) {
  const mpz_class q1 = k.size() - 1;
  auto fac = nt::factor(d);
  for (;;) {
    auto h = k.random(rng);
    if (k.is_zero(h)) continue;
    auto z = power(k, h, mpz_class(q1 / d));
    bool ok = true;
    for (auto& [l, e] : fac)
      if (k.is_one(power(k, z, mpz_class(d / l)))) ok = false;
    if (ok) return z;
  }
}

// discrete log of a to base g in a cyclic group of order l^e, g of exact order l^e
template <class K>
mpz_class dlog_prime_power(const K& k, const typename K::Elem& g, const typename K::Elem& a, const mpz_class& l,
                           unsigned e) {
  using E = typename K::Elem;
  // gamma has order l
  E gamma = power(k, g, mpz_class(nt::ipow(l, e - 1)));
  unsigned long L = l.get_ui();
  unsigned long m = 1;
  while (m * m < L) ++m;
  std::map<E, unsigned long> baby;
  E cur = k.one();
  for (unsigned long j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = k.mul(cur, gamma);
  }
  E giant = power(k, k.inv(gamma), static_cast<long long>(m));
  mpz_class x = 0, lk = 1;
  E ginv = k.inv(g);
  for (unsigned i = 0; i < e; ++i) {
    E h = power(k, k.mul(power(k, ginv, x), a), mpz_class(nt::ipow(l, e - 1 - i)));
    E y = h;
    unsigned long digit = 0;
    bool found = false;
    for (unsigned long s = 0; s <= m && !found; ++s) {
      auto it = baby.find(y);
      if (it != baby.end()) {
        digit = s * m + it->second;
        found = true;
      }
      y = k.mul(y, giant);
    }
    if (!found) throw Error("discrete logarithm failed");
    x += lk * digit;
    lk *= l;
  }
  return x;
}

template <class K>
std::optional<typename K::Elem> finite_nth_root(const K& k, const typename K::Elem& a, unsigned long n) {
  using E = typename K::Elem;
  if (k.is_zero(a)) return k.zero();
  const mpz_class q1 = k.size() - 1;
  mpz_class dz;
  mpz_class nz(n);
  mpz_gcd(dz.get_mpz_t(), nz.get_mpz_t(), q1.get_mpz_t());
  if (!k.is_one(power(k, a, mpz_class(q1 / dz)))) return std::nullopt;
  E y;
  if (dz == 1) {
    y = a;
  } else {
    // split the group order as A * B with A supported on the primes of d
    auto fac = nt::factor(dz);
    mpz_class A = 1, B = q1;
    for (auto& [l, e] : fac) {
      while (mpz_divisible_p(B.get_mpz_t(), l.get_mpz_t())) {
        B /= l;
        A *= l;
      }
    }
    mpz_class uA, uB;  // uA = B^{-1} mod A, uB = A^{-1} mod B
    mpz_invert(uA.get_mpz_t(), B.get_mpz_t(), A.get_mpz_t());
    if (B == 1)
      uB = 0;
    else
      mpz_invert(uB.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    E aA = power(k, a, mpz_class(B * uA));
    E aB = power(k, a, mpz_class(A * uB));
    E yB = k.one();
    if (B > 1) {
      mpz_class dinv;
      mpz_invert(dinv.get_mpz_t(), dz.get_mpz_t(), B.get_mpz_t());
      yB = power(k, aB, dinv);
    }
    // dlog of aA in the A-part via Pohlig-Hellman on each prime power
    Rng rng(0x9e3779b9);
    E gA = element_of_order(k, A, rng);
    mpz_class logv = 0, mod = 1;
    for (auto& [l, e0] : fac) {
      unsigned e = 0;
      mpz_class le = 1;
      while (mpz_divisible_p(mpz_class(A / le).get_mpz_t(), l.get_mpz_t())) {
        le *= l;
        ++e;
      }
      E gl = power(k, gA, mpz_class(A / le));
      E al = power(k, aA, mpz_class(A / le));
      mpz_class xl = dlog_prime_power(k, gl, al, l, e);
      // CRT combine: log = xl mod le
      mpz_class t, inv;
      mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), le.get_mpz_t());
      t = ((xl - logv) % le + le) % le * inv % le;
      logv += mod * t;
      mod *= le;
    }
    if (!mpz_divisible_p(logv.get_mpz_t(), dz.get_mpz_t())) throw Error("n-th root: inconsistent logarithm");
    E yA = power(k, gA, mpz_class(logv / dz));
    y = k.mul(yA, yB);
  }
  // y^d = a; x = y^u with u n + v (q-1) = d
  mpz_class g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), nz.get_mpz_t(), q1.get_mpz_t());
  return power(k, y, u);
}

}  // namespace

template <class K>
std::vector<typename K::Elem> roots_in_field(const PolyRing<K>& R, const typename PolyRing<K>::P& a, uint64_t seed) {
  if (a.empty()) throw PreconditionError("roots of the zero polynomial");
  if constexpr (std::is_same_v<K, RationalField>) {
    (void)seed;
    return rational_roots(R, a);
  } else {
    return finite_roots(R, a, seed);
  }
}

template <class K>
std::optional<typename K::Elem> nth_root(const K& k, const typename K::Elem& a, unsigned long n) {
  if (n == 0) throw PreconditionError("nth_root needs n >= 1");
  if (n == 1) return a;
  if constexpr (std::is_same_v<K, RationalField>) {
    if (a == 0) return mpq_class(0);
    bool negate = false;
    mpq_class b = a;
    if (b < 0) {
      if (n % 2 == 0) return std::nullopt;
      negate = true;
      b = -b;
    }
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), b.get_num().get_mpz_t(), n)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), b.get_den().get_mpz_t(), n)) return std::nullopt;
    mpq_class r(rn, rd);
    r.canonicalize();
    return negate ? mpq_class(-r) : r;
  } else {
    auto r = finite_nth_root(k, a, n);
    if (r && !(power(k, *r, static_cast<long long>(n)) == a)) throw Error("n-th root verification failed");
    return r;
  }
}

template <class K>
std::vector<typename K::Elem> roots_of_unity(const K& k, unsigned long n) {
  if constexpr (std::is_same_v<K, RationalField>) {
    if (n % 2 == 0) return {mpq_class(-1), mpq_class(1)};
    return {mpq_class(1)};
  } else {
    mpz_class d, nz(n), q1 = k.size() - 1;
    mpz_gcd(d.get_mpz_t(), nz.get_mpz_t(), q1.get_mpz_t());
    Rng rng(0x51ed);
    auto z = d == 1 ? k.one() : element_of_order(k, d, rng);
    std::vector<typename K::Elem> out;
    auto cur = k.one();
    for (unsigned long i = 0; i < d.get_ui(); ++i) {
      out.push_back(cur);
      cur = k.mul(cur, z);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
}

template <class K>
typename PolyRing<K>::P squarefree_part(const PolyRing<K>& R, const typename PolyRing<K>::P& a) {
  if (a.empty()) throw PreconditionError("square-free part of zero");
  auto d = R.derivative(a);
  if (d.empty()) return R.monic(a);
  return R.monic(R.divexact(a, R.gcd(a, d)));
}

template <class K>
typename PolyRing<K>::P radical(const PolyRing<K>& R, const typename PolyRing<K>::P& a) {
  const K& k = R.field();
  if (a.empty()) throw PreconditionError("radical of zero");
  if (R.deg(a) <= 0) return R.constant(k.one());
  auto d = R.derivative(a);
  if (d.empty()) {
    if constexpr (!K::finite) {
      throw Error("radical: vanishing derivative in characteristic 0");
    } else {
      // a = h^p
      const unsigned long p = k.characteristic().get_ui();
      typename PolyRing<K>::P h;
      for (size_t i = 0; i < a.size(); i += p) h.push_back(k.degree() > 1 ? k.frobenius(a[i], k.degree() - 1) : a[i]);
      return radical(R, h);
    }
  }
  auto g = R.gcd(a, d);
  auto w = R.monic(R.divexact(a, g));
  if (R.deg(g) == 0) return w;
  auto rg = radical(R, g);
  return R.monic(R.divexact(R.mul(w, rg), R.gcd(w, rg)));
}

template <class K>
bool is_irreducible(const PolyRing<K>& R, const typename PolyRing<K>::P& a0) {
  if constexpr (!K::finite) {
    throw CapabilityError("irreducibility test over Q is not provided");
  } else {
    auto a = R.monic(a0);
    const long d = R.deg(a);
    if (d <= 0) return false;
    if (d == 1) return true;
    const mpz_class q = R.field().size();
    std::vector<typename PolyRing<K>::P> xq(d + 1);  // x^{q^i} mod a
    xq[0] = R.x();
    for (long i = 1; i <= d; ++i) xq[i] = R.powmod(xq[i - 1], q, a);
    if (!R.sub(xq[d], R.x()).empty()) return false;
    for (auto& [l, e] : nt::factor(mpz_class(d))) {
      long j = d / l.get_si();
      auto g = R.gcd(R.sub(xq[j], R.x()), a);
      if (R.deg(g) != 0) return false;
    }
    return true;
  }
}

template <class K>
typename PolyRing<K>::P smallest_irreducible_factor(const PolyRing<K>& R, const typename PolyRing<K>::P& a0,
                                                     uint64_t seed) {
  if constexpr (!K::finite) {
    throw CapabilityError("factorization over Q is not provided");
  } else {
    auto f = R.monic(a0);
    if (R.deg(f) <= 0) throw PreconditionError("constant polynomial has no irreducible factor");
    const mpz_class q = R.field().size();
    auto h = R.x();
    Rng rng(seed);
    for (unsigned i = 1; R.deg(f) > 0; ++i) {
      h = R.powmod(h, q, f);
      auto g = R.gcd(R.sub(h, R.x()), f);
      if (R.deg(g) > 0) {
        std::vector<typename PolyRing<K>::P> parts;
        equal_degree_split(R, g, i, rng, parts);
        std::sort(parts.begin(), parts.end());
        return parts.front();
      }
    }
    throw Error("no irreducible factor found");
  }
}

std::vector<uint64_t> random_irreducible(const PrimeField& fp, unsigned d, Rng& rng) {
  PolyRing<PrimeField> R(fp);
  for (;;) {
    auto g = R.random(d, rng, true);
    if (is_irreducible(R, g)) return g;
  }
}

#define HYPERISO_ROOTS(K)                                                                                          \
  template std::vector<K::Elem> roots_in_field<K>(const PolyRing<K>&, const PolyRing<K>::P&, uint64_t);           \
  template std::optional<K::Elem> nth_root<K>(const K&, const K::Elem&, unsigned long);                           \
  template std::vector<K::Elem> roots_of_unity<K>(const K&, unsigned long);                                       \
  template PolyRing<K>::P squarefree_part<K>(const PolyRing<K>&, const PolyRing<K>::P&);                          \
  template PolyRing<K>::P radical<K>(const PolyRing<K>&, const PolyRing<K>::P&);                                   \
  template bool is_irreducible<K>(const PolyRing<K>&, const PolyRing<K>::P&);                                     \
  template PolyRing<K>::P smallest_irreducible_factor<K>(const PolyRing<K>&, const PolyRing<K>::P&, uint64_t);

HYPERISO_ROOTS(RationalField)
HYPERISO_ROOTS(PrimeField)
HYPERISO_ROOTS(ExtField)

}  // namespace hyperiso
