#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "hyperiso/field/fields.hpp"

namespace hyperiso {

// Dense univariate polynomials over K; index = degree, no trailing zeros.
template <class K>
class PolyRing {
 public:
  using E = typename K::Elem;
  using P = std::vector<E>;

  struct Mat {  // [[a, b], [c, d]]
    P a, b, c, d;
  };

  explicit PolyRing(const K& k) : k_(k) {}
  const K& field() const { return k_; }

  void trim(P& a) const;
  static long deg(const P& a) { return static_cast<long>(a.size()) - 1; }
  bool is_zero(const P& a) const { return a.empty(); }
  P constant(const E& c) const;
  P x() const { return P{k_.zero(), k_.one()}; }
  const E& lead(const P& a) const { return a.back(); }
  bool equal(const P& a, const P& b) const { return a == b; }

  P add(const P& a, const P& b) const;
  P sub(const P& a, const P& b) const;
  P neg(const P& a) const;
  P scale(const P& a, const E& c) const;
  P shift(const P& a, size_t k) const;  // a * x^k
  P mul(const P& a, const P& b) const;
  P mul_naive(const P& a, const P& b) const;
  P mul_trunc(const P& a, const P& b, size_t n) const;  // mod x^n
  P pow(const P& a, unsigned e) const;

  std::pair<P, P> divrem(const P& a, const P& b) const;
  std::pair<P, P> divrem_naive(const P& a, const P& b) const;
  P rem(const P& a, const P& b) const { return divrem(a, b).second; }
  P quo(const P& a, const P& b) const { return divrem(a, b).first; }
  // throws Error if b does not divide a
  P divexact(const P& a, const P& b) const;
  P inverse_series(const P& a, size_t n) const;

  P monic(const P& a) const;
  P gcd(const P& a, const P& b) const;
  P gcd_naive(const P& a, const P& b) const;
  // returns g = gcd, with s*a + t*b = g (g monic)
  P xgcd(const P& a, const P& b, P& s, P& t) const;
  Mat half_gcd(const P& a, const P& b) const;

  P derivative(const P& a) const;
  E eval(const P& a, const E& x) const;
  P compose_linear(const P& a, const E& s, const E& t) const;  // a(s x + t)
  P taylor_shift(const P& a, const E& t) const;                // a(x + t)
  P taylor_shift_naive(const P& a, const E& t) const;
  P reverse(const P& a, size_t n) const;  // x^n a(1/x), n >= deg a

  P mulmod(const P& a, const P& b, const P& m) const { return rem(mul(a, b), m); }
  P powmod(const P& base, const mpz_class& e, const P& m) const;
  P from_roots(const std::vector<E>& roots) const;
  P random(long degree, Rng& rng, bool monic) const;

 private:
  P karatsuba(const E* a, size_t na, const E* b, size_t nb) const;
  Mat mat_mul(const Mat& x, const Mat& y) const;
  std::pair<P, P> apply(const Mat& m, const P& a, const P& b) const;
  K k_;
};

template <class K>
std::vector<typename K::Elem> trimmed(const K& k, std::vector<typename K::Elem> a) {
  while (!a.empty() && k.is_zero(a.back())) a.pop_back();
  return a;
}

extern template class PolyRing<RationalField>;
extern template class PolyRing<PrimeField>;
extern template class PolyRing<ExtField>;

}  // namespace hyperiso
