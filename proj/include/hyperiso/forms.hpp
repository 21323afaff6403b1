#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperiso/poly.hpp"

namespace hyperiso {

// f = sum a[i] x^i z^(n-i); the degree is the formal one, a[n] may vanish.
template <class K>
struct Form {
  std::vector<typename K::Elem> a;
  int degree() const { return static_cast<int>(a.size()) - 1; }
  bool operator==(const Form&) const = default;
};

// (x, z) -> (m11 x + m12 z, m21 x + m22 z)
template <class K>
struct Moebius {
  typename K::Elem m11, m12, m21, m22;
  bool operator==(const Moebius&) const = default;
};

template <class K>
class FormOps {
 public:
  using E = typename K::Elem;
  using F = Form<K>;
  using M = Moebius<K>;

  explicit FormOps(const K& k) : k_(k), R_(k) {}
  const K& field() const { return k_; }
  const PolyRing<K>& ring() const { return R_; }

  bool is_zero(const F& f) const;
  F scale(const F& f, const E& c) const;
  F add(const F& f, const F& g) const;
  F mul(const F& f, const F& g) const;
  E eval(const F& f, const E& x, const E& z) const;
  F random(int n, Rng& rng) const;
  // coefficient vector read as f(x, 1), trimmed
  typename PolyRing<K>::P dehomogenize(const F& f) const;
  F homogenize(const typename PolyRing<K>::P& p, int n) const;
  F from_roots(const std::vector<E>& roots, bool with_infinity) const;

  // f(x + t z, z), f(s x, t z), f(z, x)
  F shift(const F& f, const E& t) const;
  F scale_vars(const F& f, const E& s, const E& t) const;
  F swap(const F& f) const;
  // f o N, and the O(n^2) reference
  F substitute(const F& f, const M& N) const;
  F substitute_naive(const F& f, const M& N) const;
  // M.f = f o M^{-1}
  F act(const M& m, const F& f) const;
  F act_naive(const M& m, const F& f) const;

  std::optional<E> is_proportional(const F& f, const F& g) const;
  // leading nonzero coefficient scaled to 1
  F normalize(const F& f) const;
  F squarefree_part(const F& f) const;
  int distinct_roots(const F& f) const;
  E discriminant(const F& f) const;
  E resultant(const typename PolyRing<K>::P& a, const typename PolyRing<K>::P& b) const;

  F frobenius(const F& f, unsigned s) const;

  // 2x2 matrices
  M identity() const { return M{k_.one(), k_.zero(), k_.zero(), k_.one()}; }
  M mat(long long a, long long b, long long c, long long d) const;
  M mat_mul(const M& x, const M& y) const;
  M mat_inv(const M& x) const;
  M mat_scale(const M& x, const E& c) const;
  E det(const M& x) const;
  M mat_frobenius(const M& x, unsigned s) const;
  // representative with first nonzero entry equal to 1
  M projective_normal(const M& x) const;
  bool proj_equal(const M& x, const M& y) const;
  bool proj_less(const M& x, const M& y) const;
  bool is_scalar(const M& x) const;
  std::string mat_str(const M& x) const;

 private:
  K k_;
  PolyRing<K> R_;
};

extern template class FormOps<RationalField>;
extern template class FormOps<PrimeField>;
extern template class FormOps<ExtField>;

}  // namespace hyperiso
