#include "hyperiso/forms.hpp"

#include <algorithm>

#include "hyperiso/roots.hpp"

namespace hyperiso {

template <class K>
bool FormOps<K>::is_zero(const F& f) const {
  for (const auto& c : f.a)
    if (!k_.is_zero(c)) return false;
  return true;
}

template <class K>
auto FormOps<K>::scale(const F& f, const E& c) const -> F {
  F r = f;
  for (auto& x : r.a) x = k_.mul(x, c);
  return r;
}

template <class K>
auto FormOps<K>::add(const F& f, const F& g) const -> F {
  if (f.degree() != g.degree()) throw PreconditionError("adding forms of different degrees");
  F r = f;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = k_.add(r.a[i], g.a[i]);
  return r;
}

template <class K>
auto FormOps<K>::mul(const F& f, const F& g) const -> F {
  auto p = R_.mul(dehomogenize(f), dehomogenize(g));
  return homogenize(p, f.degree() + g.degree());
}

template <class K>
auto FormOps<K>::eval(const F& f, const E& x, const E& z) const -> E {
  E r = k_.zero(), zp = k_.one();
  // Horner in x with z powers accumulated from the top
  for (int i = f.degree(); i >= 0; --i) {
    r = k_.add(k_.mul(r, x), k_.mul(f.a[i], zp));
    zp = k_.mul(zp, z);
  }
  return r;
}

template <class K>
auto FormOps<K>::random(int n, Rng& rng) const -> F {
  F f;
  f.a.resize(n + 1);
  for (auto& c : f.a) c = k_.random(rng);
  return f;
}

template <class K>
auto FormOps<K>::dehomogenize(const F& f) const -> typename PolyRing<K>::P {
  return trimmed(k_, f.a);
}

template <class K>
auto FormOps<K>::homogenize(const typename PolyRing<K>::P& p, int n) const -> F {
  if (PolyRing<K>::deg(p) > n) throw PreconditionError("polynomial degree exceeds form degree");
  F f;
  f.a = p;
  f.a.resize(n + 1, k_.zero());
  return f;
}

template <class K>
auto FormOps<K>::from_roots(const std::vector<E>& roots, bool with_infinity) const -> F {
  auto p = R_.from_roots(roots);
  return homogenize(p, static_cast<int>(roots.size()) + (with_infinity ? 1 : 0));
}

template <class K>
auto FormOps<K>::shift(const F& f, const E& t) const -> F {
  return homogenize(R_.taylor_shift(dehomogenize(f), t), f.degree());
}

template <class K>
auto FormOps<K>::scale_vars(const F& f, const E& s, const E& t) const -> F {
  const int n = f.degree();
  std::vector<E> sp(n + 1), tp(n + 1);
  sp[0] = tp[0] = k_.one();
  for (int i = 1; i <= n; ++i) {
    sp[i] = k_.mul(sp[i - 1], s);
    tp[i] = k_.mul(tp[i - 1], t);
  }
  F r = f;
  for (int i = 0; i <= n; ++i) r.a[i] = k_.mul(r.a[i], k_.mul(sp[i], tp[n - i]));
  return r;
}

template <class K>
auto FormOps<K>::swap(const F& f) const -> F {
  F r = f;
  std::reverse(r.a.begin(), r.a.end());
  return r;
}

template <class K>
auto FormOps<K>::substitute(const F& f, const M& N) const -> F {
  if (k_.is_zero(N.m11)) {
    if (k_.is_zero(N.m21)) throw PreconditionError("singular substitution");
    return substitute(swap(f), M{N.m21, N.m22, N.m11, N.m12});
  }
  const E& a = N.m11;
  const E dt = det(N);
  if (k_.is_zero(dt)) throw PreconditionError("singular substitution");
  const E ainv = k_.inv(a);
  F g = f;
  const E c = k_.mul(N.m21, ainv);
  if (!k_.is_zero(c)) g = swap(shift(swap(g), c));
  g = scale_vars(g, a, k_.mul(dt, ainv));
  const E b = k_.mul(N.m12, ainv);
  if (!k_.is_zero(b)) g = shift(g, b);
  return g;
}

template <class K>
auto FormOps<K>::substitute_naive(const F& f, const M& N) const -> F {
  // homogeneous Horner: h_k = h_{k-1} X + a_{n-k} Z^k
  const int n = f.degree();
  using P = typename PolyRing<K>::P;
  auto lin = [&](const E& cx, const E& cz) {  // cz * z + cx * x as coefficient vector a0 + a1 x
    return P{cz, cx};
  };
  const P X = lin(N.m11, N.m12), Z = lin(N.m21, N.m22);
  std::vector<E> h{f.a[n]};
  std::vector<E> zk{k_.one()};
  for (int k = 1; k <= n; ++k) {
    std::vector<E> nz(k + 1, k_.zero()), nh(k + 1, k_.zero());
    for (int i = 0; i < k; ++i) {
      // multiply Z^{k-1} by Z and h by X, degrees tracked as forms
      nz[i] = k_.add(nz[i], k_.mul(zk[i], Z[0]));
      nz[i + 1] = k_.add(nz[i + 1], k_.mul(zk[i], Z[1]));
      nh[i] = k_.add(nh[i], k_.mul(h[i], X[0]));
      nh[i + 1] = k_.add(nh[i + 1], k_.mul(h[i], X[1]));
    }
    zk = std::move(nz);
    const E& c = f.a[n - k];
    if (!k_.is_zero(c))
      for (int i = 0; i <= k; ++i) nh[i] = k_.add(nh[i], k_.mul(c, zk[i]));
    h = std::move(nh);
  }
  F r;
  r.a = std::move(h);
  return r;
}

template <class K>
auto FormOps<K>::act(const M& m, const F& f) const -> F {
  const E d = det(m);
  if (k_.is_zero(d)) throw PreconditionError("singular matrix");
  M adj{m.m22, k_.neg(m.m12), k_.neg(m.m21), m.m11};
  return scale(substitute(f, adj), power(k_, k_.inv(d), static_cast<long long>(f.degree())));
}

template <class K>
auto FormOps<K>::act_naive(const M& m, const F& f) const -> F {
  const E d = det(m);
  if (k_.is_zero(d)) throw PreconditionError("singular matrix");
  M adj{m.m22, k_.neg(m.m12), k_.neg(m.m21), m.m11};
  return scale(substitute_naive(f, adj), power(k_, k_.inv(d), static_cast<long long>(f.degree())));
}

template <class K>
auto FormOps<K>::is_proportional(const F& f, const F& g) const -> std::optional<E> {
  if (f.degree() != g.degree()) return std::nullopt;
  size_t i = 0;
  while (i < g.a.size() && k_.is_zero(g.a[i])) ++i;
  if (i == g.a.size()) return std::nullopt;
  if (k_.is_zero(f.a[i])) return std::nullopt;
  E lam = k_.div(f.a[i], g.a[i]);
  for (size_t j = 0; j < f.a.size(); ++j)
    if (!(f.a[j] == k_.mul(lam, g.a[j]))) return std::nullopt;
  return lam;
}

template <class K>
auto FormOps<K>::normalize(const F& f) const -> F {
  for (size_t i = f.a.size(); i-- > 0;)
    if (!k_.is_zero(f.a[i])) return scale(f, k_.inv(f.a[i]));
  return f;
}

template <class K>
auto FormOps<K>::squarefree_part(const F& f) const -> F {
  if (is_zero(f)) throw PreconditionError("square-free part of the zero form");
  auto p = dehomogenize(f);
  const int n = f.degree();
  const int inf = n - static_cast<int>(PolyRing<K>::deg(p));
  auto d = R_.derivative(p);
  typename PolyRing<K>::P s;
  if (d.empty()) {
    if (R_.deg(p) > 0) throw CharacteristicObstruction("derivative vanishes identically");
    s = R_.constant(k_.one());
  } else {
    auto g = R_.gcd(p, d);
    if (R_.deg(g) > 0 && k_.characteristic() != 0 && k_.characteristic() <= n)
      throw CharacteristicObstruction("square-free part needs characteristic 0 or > degree");
    s = R_.monic(R_.divexact(p, g));
  }
  return homogenize(s, static_cast<int>(R_.deg(s)) + (inf > 0 ? 1 : 0));
}

template <class K>
int FormOps<K>::distinct_roots(const F& f) const {
  if (is_zero(f)) throw PreconditionError("roots of the zero form");
  auto p = dehomogenize(f);
  const bool inf = R_.deg(p) < f.degree();
  return static_cast<int>(R_.deg(radical(R_, p))) + (inf ? 1 : 0);
}

template <class K>
auto FormOps<K>::resultant(const typename PolyRing<K>::P& a0, const typename PolyRing<K>::P& b0) const -> E {
  auto a = a0, b = b0;
  if (a.empty() || b.empty()) return k_.zero();
  E res = k_.one();
  for (;;) {
    long da = R_.deg(a), db = R_.deg(b);
    if (db == 0) return k_.mul(res, power(k_, b[0], static_cast<long long>(da)));
    auto r = R_.rem(a, b);
    if (r.empty()) return k_.zero();
    long dr = R_.deg(r);
    if ((da & 1) && (db & 1)) res = k_.neg(res);
    res = k_.mul(res, power(k_, b.back(), static_cast<long long>(da - dr)));
    a = std::move(b);
    b = std::move(r);
  }
}

template <class K>
auto FormOps<K>::discriminant(const F& f) const -> E {
  int n = f.degree();
  if (n < 2) throw PreconditionError("discriminant needs degree >= 2");
  // a root at infinity: Disc_n = a_{n-1}^2 Disc_{n-1}
  if (k_.is_zero(f.a[n])) {
    if (k_.is_zero(f.a[n - 1])) return k_.zero();
    if (n == 2) return k_.mul(f.a[1], f.a[1]);
    F g;
    g.a.assign(f.a.begin(), f.a.end() - 1);
    E d = discriminant(g);
    return k_.mul(k_.mul(f.a[n - 1], f.a[n - 1]), d);
  }
  auto p = dehomogenize(f);
  auto dp = R_.derivative(p);
  E r = resultant(p, dp);
  // formal degree of the derivative is n - 1
  if (!dp.empty() && R_.deg(dp) < n - 1) r = k_.mul(r, power(k_, f.a[n], static_cast<long long>(n - 1 - R_.deg(dp))));
  r = k_.div(r, f.a[n]);
  if ((static_cast<long>(n) * (n - 1) / 2) & 1) r = k_.neg(r);
  return r;
}

template <class K>
auto FormOps<K>::frobenius(const F& f, unsigned s) const -> F {
  F r = f;
  if constexpr (K::finite)
    for (auto& c : r.a) c = k_.frobenius(c, s);
  return r;
}

template <class K>
auto FormOps<K>::mat(long long a, long long b, long long c, long long d) const -> M {
  return M{k_.from_int(a), k_.from_int(b), k_.from_int(c), k_.from_int(d)};
}

template <class K>
auto FormOps<K>::mat_mul(const M& x, const M& y) const -> M {
  return M{k_.add(k_.mul(x.m11, y.m11), k_.mul(x.m12, y.m21)), k_.add(k_.mul(x.m11, y.m12), k_.mul(x.m12, y.m22)),
           k_.add(k_.mul(x.m21, y.m11), k_.mul(x.m22, y.m21)), k_.add(k_.mul(x.m21, y.m12), k_.mul(x.m22, y.m22))};
}

template <class K>
auto FormOps<K>::det(const M& x) const -> E {
  return k_.sub(k_.mul(x.m11, x.m22), k_.mul(x.m12, x.m21));
}

template <class K>
auto FormOps<K>::mat_inv(const M& x) const -> M {
  E d = det(x);
  if (k_.is_zero(d)) throw PreconditionError("singular matrix");
  E di = k_.inv(d);
  return M{k_.mul(x.m22, di), k_.neg(k_.mul(x.m12, di)), k_.neg(k_.mul(x.m21, di)), k_.mul(x.m11, di)};
}

template <class K>
auto FormOps<K>::mat_scale(const M& x, const E& c) const -> M {
  return M{k_.mul(x.m11, c), k_.mul(x.m12, c), k_.mul(x.m21, c), k_.mul(x.m22, c)};
}

template <class K>
auto FormOps<K>::mat_frobenius(const M& x, unsigned s) const -> M {
  if constexpr (K::finite)
    return M{k_.frobenius(x.m11, s), k_.frobenius(x.m12, s), k_.frobenius(x.m21, s), k_.frobenius(x.m22, s)};
  else
    return x;
}

template <class K>
auto FormOps<K>::projective_normal(const M& x) const -> M {
  for (const E* e : {&x.m11, &x.m12, &x.m21, &x.m22})
    if (!k_.is_zero(*e)) return mat_scale(x, k_.inv(*e));
  throw PreconditionError("zero matrix");
}

template <class K>
bool FormOps<K>::proj_equal(const M& x, const M& y) const {
  return projective_normal(x) == projective_normal(y);
}

template <class K>
bool FormOps<K>::proj_less(const M& x, const M& y) const {
  M a = projective_normal(x), b = projective_normal(y);
  return std::tie(a.m11, a.m12, a.m21, a.m22) < std::tie(b.m11, b.m12, b.m21, b.m22);
}

template <class K>
bool FormOps<K>::is_scalar(const M& x) const {
  return k_.is_zero(x.m12) && k_.is_zero(x.m21) && x.m11 == x.m22;
}

template <class K>
std::string FormOps<K>::mat_str(const M& x) const {
  return "[[" + k_.str(x.m11) + "," + k_.str(x.m12) + "],[" + k_.str(x.m21) + "," + k_.str(x.m22) + "]]";
}

template class FormOps<RationalField>;
template class FormOps<PrimeField>;
template class FormOps<ExtField>;

}  // namespace hyperiso
