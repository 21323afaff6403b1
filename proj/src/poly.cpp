#include "hyperiso/poly.hpp"

#include <algorithm>

#include "hyperiso/kernels.hpp"
#include "hyperiso/ntt.hpp"

namespace hyperiso {

namespace {
constexpr size_t kKaratsubaCutoff = 24;
constexpr size_t kNttCutoff = 48;
constexpr long kNewtonCutoff = 48;
constexpr long kHalfGcdCutoff = 80;
}  // namespace

template <class K>
void PolyRing<K>::trim(P& a) const {
  while (!a.empty() && k_.is_zero(a.back())) a.pop_back();
}

template <class K>
auto PolyRing<K>::constant(const E& c) const -> P {
  if (k_.is_zero(c)) return {};
  return P{c};
}

template <class K>
auto PolyRing<K>::add(const P& a, const P& b) const -> P {
  const P& big = a.size() >= b.size() ? a : b;
  const P& small = a.size() >= b.size() ? b : a;
  P r = big;
  for (size_t i = 0; i < small.size(); ++i) r[i] = k_.add(r[i], small[i]);
  trim(r);
  return r;
}

template <class K>
auto PolyRing<K>::sub(const P& a, const P& b) const -> P {
  P r = a;
  if (r.size() < b.size()) r.resize(b.size(), k_.zero());
  for (size_t i = 0; i < b.size(); ++i) r[i] = k_.sub(r[i], b[i]);
  trim(r);
  return r;
}

template <class K>
auto PolyRing<K>::neg(const P& a) const -> P {
  P r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k_.neg(a[i]);
  return r;
}

template <class K>
auto PolyRing<K>::scale(const P& a, const E& c) const -> P {
  if (k_.is_zero(c)) return {};
  P r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k_.mul(a[i], c);
  return r;
}

template <class K>
auto PolyRing<K>::shift(const P& a, size_t k) const -> P {
  if (a.empty()) return {};
  P r(a.size() + k, k_.zero());
  std::copy(a.begin(), a.end(), r.begin() + k);
  return r;
}

template <class K>
auto PolyRing<K>::mul_naive(const P& a, const P& b) const -> P {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, k_.zero());
  if constexpr (std::is_same_v<K, PrimeField>) {
    const uint64_t p = k_.p();
    if (p < ntt::kMaxModulus) {
      const auto& kt = kernels::active();
      const P& x = a.size() >= b.size() ? a : b;
      const P& y = a.size() >= b.size() ? b : a;
      for (size_t j = 0; j < y.size(); ++j) {
        if (y[j] == 0) continue;
        kt.axpy_mod(r.data() + j, x.data(), x.size(), y[j], kernels::shoup_precompute(y[j], p), p);
      }
      trim(r);
      return r;
    }
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (k_.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = k_.add(r[i + j], k_.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

template <class K>
auto PolyRing<K>::karatsuba(const E* a, size_t na, const E* b, size_t nb) const -> P {
  if (na == 0 || nb == 0) return {};
  if (std::min(na, nb) <= kKaratsubaCutoff) {
    P r = mul_naive(P(a, a + na), P(b, b + nb));
    r.resize(na + nb - 1, k_.zero());
    return r;
  }
  size_t h = std::max(na, nb) / 2;
  if (h >= na || h >= nb) {
    // unbalanced: slice the longer operand
    const E* l = na >= nb ? a : b;
    const E* s = na >= nb ? b : a;
    size_t nl = std::max(na, nb), ns = std::min(na, nb);
    P r(nl + ns - 1, k_.zero());
    for (size_t off = 0; off < nl; off += ns) {
      size_t len = std::min(ns, nl - off);
      P part = karatsuba(l + off, len, s, ns);
      for (size_t i = 0; i < part.size(); ++i) r[off + i] = k_.add(r[off + i], part[i]);
    }
    return r;
  }
  P z0 = karatsuba(a, h, b, h);
  P z2 = karatsuba(a + h, na - h, b + h, nb - h);
  P sa(std::max(h, na - h), k_.zero()), sb(std::max(h, nb - h), k_.zero());
  for (size_t i = 0; i < na; ++i) sa[i < h ? i : i - h] = k_.add(sa[i < h ? i : i - h], a[i]);
  for (size_t i = 0; i < nb; ++i) sb[i < h ? i : i - h] = k_.add(sb[i < h ? i : i - h], b[i]);
  P z1 = karatsuba(sa.data(), sa.size(), sb.data(), sb.size());
  for (size_t i = 0; i < z0.size(); ++i) z1[i] = k_.sub(z1[i], z0[i]);
  for (size_t i = 0; i < z2.size(); ++i) z1[i] = k_.sub(z1[i], z2[i]);
  P r(na + nb - 1, k_.zero());
  for (size_t i = 0; i < z0.size(); ++i) r[i] = k_.add(r[i], z0[i]);
  for (size_t i = 0; i < z1.size() && i + h < r.size(); ++i) r[i + h] = k_.add(r[i + h], z1[i]);
  for (size_t i = 0; i < z2.size(); ++i) r[i + 2 * h] = k_.add(r[i + 2 * h], z2[i]);
  return r;
}

template <class K>
auto PolyRing<K>::mul(const P& a, const P& b) const -> P {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= kKaratsubaCutoff) return mul_naive(a, b);
  if constexpr (std::is_same_v<K, PrimeField>) {
    if (k_.p() < ntt::kMaxModulus && std::min(a.size(), b.size()) > kNttCutoff) {
      P r = ntt::multiply(a, b, k_.p());
      trim(r);
      return r;
    }
  }
  if constexpr (std::is_same_v<K, ExtField>) {
    // Kronecker substitution into F_p[y] with stride 2r - 1
    const size_t r = k_.degree(), stride = 2 * r - 1;
    PolyRing<PrimeField> base(k_.base());
    std::vector<uint64_t> pa(a.size() * stride, 0), pb(b.size() * stride, 0);
    for (size_t i = 0; i < a.size(); ++i) std::copy(a[i].begin(), a[i].end(), pa.begin() + i * stride);
    for (size_t i = 0; i < b.size(); ++i) std::copy(b[i].begin(), b[i].end(), pb.begin() + i * stride);
    base.trim(pa);
    base.trim(pb);
    std::vector<uint64_t> pc = base.mul(pa, pb);
    P out(a.size() + b.size() - 1);
    for (size_t i = 0; i < out.size(); ++i) {
      std::vector<uint64_t> c(stride, 0);
      for (size_t j = 0; j < stride && i * stride + j < pc.size(); ++j) c[j] = pc[i * stride + j];
      out[i] = k_.from_coeffs(std::move(c));
    }
    trim(out);
    return out;
  }
  P r = karatsuba(a.data(), a.size(), b.data(), b.size());
  trim(r);
  return r;
}

template <class K>
auto PolyRing<K>::mul_trunc(const P& a, const P& b, size_t n) const -> P {
  P x(a.begin(), a.begin() + std::min(a.size(), n));
  P y(b.begin(), b.begin() + std::min(b.size(), n));
  trim(x);
  trim(y);
  P r = mul(x, y);
  if (r.size() > n) r.resize(n);
  trim(r);
  return r;
}

template <class K>
auto PolyRing<K>::pow(const P& a, unsigned e) const -> P {
  P r = constant(k_.one()), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

template <class K>
auto PolyRing<K>::divrem_naive(const P& a, const P& b) const -> std::pair<P, P> {
  if (b.empty()) throw PreconditionError("polynomial division by zero");
  if (a.size() < b.size()) return {P{}, a};
  P r = a;
  P q(a.size() - b.size() + 1, k_.zero());
  const E linv = k_.inv(b.back());
  const bool unit = k_.is_one(b.back());
  for (size_t i = q.size(); i-- > 0;) {
    E c = r[i + b.size() - 1];
    if (k_.is_zero(c)) continue;
    if (!unit) c = k_.mul(c, linv);
    q[i] = c;
    if constexpr (std::is_same_v<K, PrimeField>) {
      if (k_.p() < ntt::kMaxModulus) {
        const uint64_t nc = k_.neg(c);
        kernels::active().axpy_mod(r.data() + i, b.data(), b.size() - 1, nc,
                                   kernels::shoup_precompute(nc, k_.p()), k_.p());
        r[i + b.size() - 1] = 0;
        continue;
      }
    }
    for (size_t j = 0; j + 1 < b.size(); ++j) r[i + j] = k_.sub(r[i + j], k_.mul(c, b[j]));
    r[i + b.size() - 1] = k_.zero();
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

template <class K>
auto PolyRing<K>::reverse(const P& a, size_t n) const -> P {
  P r(n + 1, k_.zero());
  for (size_t i = 0; i < a.size() && i <= n; ++i) r[n - i] = a[i];
  trim(r);
  return r;
}

template <class K>
auto PolyRing<K>::inverse_series(const P& a, size_t n) const -> P {
  if (a.empty() || k_.is_zero(a[0])) throw PreconditionError("series not invertible");
  P b{k_.inv(a[0])};
  size_t len = 1;
  while (len < n) {
    len = std::min(2 * len, n);
    // b <- b (2 - a b) mod x^len
    P ab = mul_trunc(a, b, len);
    P two_minus = neg(ab);
    if (two_minus.empty()) two_minus.push_back(k_.zero());
    two_minus[0] = k_.add(two_minus[0], k_.from_int(2));
    trim(two_minus);
    b = mul_trunc(b, two_minus, len);
  }
  return b;
}

template <class K>
auto PolyRing<K>::divrem(const P& a, const P& b) const -> std::pair<P, P> {
  if (b.empty()) throw PreconditionError("polynomial division by zero");
  if (a.size() < b.size()) return {P{}, a};
  const long db = deg(b), dq = deg(a) - deg(b);
  if constexpr (!K::finite) return divrem_naive(a, b);
  if (db < kNewtonCutoff || dq < kNewtonCutoff) return divrem_naive(a, b);
  const size_t m = static_cast<size_t>(dq) + 1;
  P rb = reverse(b, db);
  P rinv = inverse_series(rb, m);
  P ra = reverse(a, deg(a));
  P rq = mul_trunc(ra, rinv, m);
  P q = reverse(rq, dq);
  P r = sub(a, mul(b, q));
  return {q, r};
}

template <class K>
auto PolyRing<K>::divexact(const P& a, const P& b) const -> P {
  auto [q, r] = divrem(a, b);
  if (!r.empty()) throw Error("inexact polynomial division");
  return q;
}

template <class K>
auto PolyRing<K>::monic(const P& a) const -> P {
  if (a.empty() || k_.is_one(a.back())) return a;
  return scale(a, k_.inv(a.back()));
}

template <class K>
auto PolyRing<K>::gcd_naive(const P& a0, const P& b0) const -> P {
  P a = a0, b = b0;
  while (!b.empty()) {
    P r = divrem_naive(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

template <class K>
auto PolyRing<K>::mat_mul(const Mat& x, const Mat& y) const -> Mat {
  return Mat{add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
             add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
}

template <class K>
auto PolyRing<K>::apply(const Mat& m, const P& a, const P& b) const -> std::pair<P, P> {
  return {add(mul(m.a, a), mul(m.b, b)), add(mul(m.c, a), mul(m.d, b))};
}

// Returns M with (a', b') = M (a, b), deg a' >= ceil(deg a / 2) > deg b'.
template <class K>
auto PolyRing<K>::half_gcd(const P& a, const P& b) const -> Mat {
  const P one = constant(k_.one());
  Mat id{one, P{}, P{}, one};
  const long n = deg(a), m = (n + 1) / 2;
  if (deg(b) < m) return id;
  auto drop = [](const P& p, long k) { return k >= static_cast<long>(p.size()) ? P{} : P(p.begin() + k, p.end()); };
  if (n < kHalfGcdCutoff) {
    Mat r = id;
    P x = a, y = b;
    while (deg(y) >= m) {
      auto [q, rem] = divrem(x, y);
      r = Mat{r.c, r.d, sub(r.a, mul(q, r.c)), sub(r.b, mul(q, r.d))};
      x = std::move(y);
      y = std::move(rem);
    }
    return r;
  }
  Mat r = half_gcd(drop(a, m), drop(b, m));
  auto [x, y] = apply(r, a, b);
  if (deg(y) < m) return r;
  auto [q, rem] = divrem(x, y);
  r = Mat{r.c, r.d, sub(r.a, mul(q, r.c)), sub(r.b, mul(q, r.d))};
  x = std::move(y);
  y = std::move(rem);
  if (deg(y) < m) return r;
  const long k = 2 * m - deg(x);
  Mat r2 = half_gcd(drop(x, k), drop(y, k));
  return mat_mul(r2, r);
}

template <class K>
auto PolyRing<K>::gcd(const P& a0, const P& b0) const -> P {
  P a = a0, b = b0;
  if (a.size() < b.size()) std::swap(a, b);
  if constexpr (!K::finite) return gcd_naive(a, b);
  while (!b.empty()) {
    if (deg(a) < kHalfGcdCutoff) return gcd_naive(a, b);
    if (deg(a) == deg(b)) {
      P r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
      continue;
    }
    Mat m = half_gcd(a, b);
    auto [x, y] = apply(m, a, b);
    if (y.empty()) {
      a = std::move(x);
      break;
    }
    P r = rem(x, y);
    a = std::move(y);
    b = std::move(r);
  }
  return monic(a);
}

template <class K>
auto PolyRing<K>::xgcd(const P& a0, const P& b0, P& s, P& t) const -> P {
  P r0 = a0, r1 = b0;
  P s0 = constant(k_.one()), s1{}, t0{}, t1 = constant(k_.one());
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1);
    P s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = {};
    t = {};
    return {};
  }
  E li = k_.inv(r0.back());
  s = scale(s0, li);
  t = scale(t0, li);
  return scale(r0, li);
}

template <class K>
auto PolyRing<K>::derivative(const P& a) const -> P {
  if (a.size() <= 1) return {};
  P r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = k_.mul(a[i], k_.from_int(static_cast<long long>(i)));
  trim(r);
  return r;
}

template <class K>
auto PolyRing<K>::eval(const P& a, const E& x) const -> E {
  E r = k_.zero();
  for (size_t i = a.size(); i-- > 0;) r = k_.add(k_.mul(r, x), a[i]);
  return r;
}

template <class K>
auto PolyRing<K>::taylor_shift_naive(const P& a, const E& t) const -> P {
  P r = a;
  const long n = deg(r);
  for (long i = 0; i < n; ++i)
    for (long j = n - 1; j >= i; --j) r[j] = k_.add(r[j], k_.mul(t, r[j + 1]));
  trim(r);
  return r;
}

template <class K>
auto PolyRing<K>::taylor_shift(const P& a, const E& t) const -> P {
  if (a.size() <= 1 || k_.is_zero(t)) return a;
  const size_t n = a.size() - 1;
  bool fast = n > 32;
  if constexpr (K::finite) fast = fast && k_.characteristic() > n;
  if (!fast) return taylor_shift_naive(a, t);
  // b_k = (1/k!) sum_i a_i i! t^{i-k}/(i-k)!
  std::vector<E> fact(n + 1), ifact(n + 1);
  fact[0] = k_.one();
  for (size_t i = 1; i <= n; ++i) fact[i] = k_.mul(fact[i - 1], k_.from_int(static_cast<long long>(i)));
  ifact[n] = k_.inv(fact[n]);
  for (size_t i = n; i > 0; --i) ifact[i - 1] = k_.mul(ifact[i], k_.from_int(static_cast<long long>(i)));
  P u(n + 1), v(n + 1);
  E tp = k_.one();
  for (size_t i = 0; i <= n; ++i) {
    u[n - i] = k_.mul(a[i], fact[i]);
    v[i] = k_.mul(tp, ifact[i]);
    tp = k_.mul(tp, t);
  }
  trim(u);
  trim(v);
  P w = mul(u, v);
  w.resize(std::max(w.size(), n + 1), k_.zero());
  P r(n + 1);
  for (size_t k = 0; k <= n; ++k) r[k] = k_.mul(w[n - k], ifact[k]);
  trim(r);
  return r;
}

template <class K>
auto PolyRing<K>::compose_linear(const P& a, const E& s, const E& t) const -> P {
  P r = a;
  E sp = k_.one();
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] = k_.mul(r[i], sp);
    sp = k_.mul(sp, s);
  }
  trim(r);
  // a(s x + t) = (a(s x))(x + t/s)
  if (k_.is_zero(s)) return constant(eval(a, t));
  return taylor_shift(r, k_.div(t, s));
}

template <class K>
auto PolyRing<K>::powmod(const P& base, const mpz_class& e, const P& m) const -> P {
  P r = constant(k_.one());
  if (deg(m) == 0) return {};
  P b = rem(base, m);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = mulmod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, b, m);
  }
  return r;
}

template <class K>
auto PolyRing<K>::from_roots(const std::vector<E>& roots) const -> P {
  if (roots.empty()) return constant(k_.one());
  std::vector<P> layer;
  for (const E& r : roots) layer.push_back(P{k_.neg(r), k_.one()});
  while (layer.size() > 1) {
    std::vector<P> next;
    for (size_t i = 0; i + 1 < layer.size(); i += 2) next.push_back(mul(layer[i], layer[i + 1]));
    if (layer.size() % 2) next.push_back(layer.back());
    layer = std::move(next);
  }
  return layer[0];
}

template <class K>
auto PolyRing<K>::random(long degree, Rng& rng, bool make_monic) const -> P {
  P r(degree + 1);
  for (auto& c : r) c = k_.random(rng);
  if (make_monic)
    r.back() = k_.one();
  else
    while (k_.is_zero(r.back())) r.back() = k_.random(rng);
  return r;
}

template class PolyRing<RationalField>;
template class PolyRing<PrimeField>;
template class PolyRing<ExtField>;

}  // namespace hyperiso
