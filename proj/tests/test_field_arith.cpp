#include <doctest.h>

#include <set>

#include "hyperiso/extension.hpp"
#include "hyperiso/roots.hpp"

using namespace hyperiso;

namespace {

template <class K>
std::vector<typename K::Elem> all_elements(const K& k) {
  std::vector<typename K::Elem> out;
  if constexpr (std::is_same_v<K, PrimeField>) {
    for (uint64_t a = 0; a < k.p(); ++a) out.push_back(a);
  } else {
    const uint64_t q = k.size().get_ui();
    for (uint64_t idx = 0; idx < q; ++idx) {
      std::vector<uint64_t> c(k.degree());
      uint64_t t = idx;
      for (auto& x : c) x = t % k.p(), t /= k.p();
      out.push_back(k.from_coeffs(c));
    }
  }
  return out;
}

template <class K>
void check_roots_exhaustive(const K& k, int trials, uint64_t seed) {
  PolyRing<K> R(k);
  Rng rng(seed);
  auto elems = all_elements(k);
  for (int t = 0; t < trials; ++t) {
    long d = 1 + rng() % 7;
    typename PolyRing<K>::P a;
    if (t % 3 == 0) {
      std::vector<typename K::Elem> rs;
      for (long i = 0; i < d; ++i) rs.push_back(elems[rng() % elems.size()]);
      a = R.mul(R.from_roots(rs), R.random(rng() % 3, rng, true));
    } else {
      a = R.random(d, rng, false);
    }
    if (R.is_zero(a)) continue;
    auto got = roots_in_field(R, a, seed + t);
    std::vector<typename K::Elem> want;
    for (auto& x : elems)
      if (k.is_zero(R.eval(a, x))) want.push_back(x);
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

template <class K>
void check_nth_root_exhaustive(const K& k) {
  auto elems = all_elements(k);
  for (unsigned long n : {1ul, 2ul, 3ul, 4ul, 5ul, 6ul, 8ul, 12ul}) {
    for (auto& a : elems) {
      auto r = nth_root(k, a, n);
      if (r) {
        CHECK(power(k, *r, (long long)n) == a);
      } else {
        bool any = false;
        for (auto& x : elems) any = any || power(k, x, (long long)n) == a;
        CHECK_FALSE(any);
      }
    }
  }
}

}  // namespace

TEST_CASE("gcd examples") {
  PrimeField f7(7);
  PolyRing<PrimeField> R(f7);
  // x^2 - 1, x - 1
  CHECK(R.gcd({6, 0, 1}, {6, 1}) == std::vector<uint64_t>{6, 1});
  CHECK(R.gcd({3, 0, 2}, {}) == R.monic({3, 0, 2}));
  CHECK(R.gcd({}, {}).empty());
}

TEST_CASE("gcd divides and is maximal") {
  for (uint64_t p : {10007ull, 2147483647ull}) {
    PrimeField k(p);
    PolyRing<PrimeField> R(k);
    Rng rng(p);
    for (int t = 0; t < 40; ++t) {
      long dg = rng() % 60;
      auto g = R.random(dg, rng, true);
      auto a = R.mul(g, R.random(rng() % 150, rng, false));
      auto b = R.mul(g, R.random(rng() % 150, rng, false));
      if (R.is_zero(a) || R.is_zero(b)) continue;
      auto d = R.gcd(a, b);
      CHECK(R.divrem(a, d).second.empty());
      CHECK(R.divrem(b, d).second.empty());
      CHECK(R.divrem(d, g).second.empty());
      CHECK(d == R.gcd_naive(a, b));
    }
  }
  RationalField Q;
  PolyRing<RationalField> RQ(Q);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    auto g = RQ.random(rng() % 4, rng, false);
    if (RQ.is_zero(g)) continue;
    auto a = RQ.mul(g, RQ.random(rng() % 5, rng, false));
    auto b = RQ.mul(g, RQ.random(rng() % 5, rng, false));
    if (RQ.is_zero(a) || RQ.is_zero(b)) continue;
    auto d = RQ.gcd(a, b);
    CHECK(RQ.divrem(a, d).second.empty());
    CHECK(RQ.divrem(b, d).second.empty());
    CHECK(RQ.divrem(d, g).second.empty());
  }
}

TEST_CASE("fast polynomial arithmetic matches schoolbook") {
  PrimeField k(1000003);
  PolyRing<PrimeField> R(k);
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    auto a = R.random(rng() % 400, rng, false), b = R.random(1 + rng() % 300, rng, true);
    CHECK(R.mul(a, b) == R.mul_naive(a, b));
    CHECK(R.divrem(a, b) == R.divrem_naive(a, b));
    auto c = k.random(rng);
    CHECK(R.taylor_shift(a, c) == R.taylor_shift_naive(a, c));
  }
  ExtField F = make_gf(101, 3, 7);
  PolyRing<ExtField> RE(F);
  for (int t = 0; t < 10; ++t) {
    auto a = RE.random(rng() % 90, rng, false), b = RE.random(rng() % 90, rng, false);
    CHECK(RE.mul(a, b) == RE.mul_naive(a, b));
  }
  RationalField Q;
  PolyRing<RationalField> RQ(Q);
  for (int t = 0; t < 5; ++t) {
    auto a = RQ.random(rng() % 70, rng, false), b = RQ.random(rng() % 70, rng, false);
    CHECK(RQ.mul(a, b) == RQ.mul_naive(a, b));
  }
}

TEST_CASE("roots examples") {
  PrimeField f7(7), f13(13);
  CHECK(roots_in_field(PolyRing<PrimeField>(f7), {1, 0, 1}).empty());
  CHECK(roots_in_field(PolyRing<PrimeField>(f13), {1, 0, 1}) == std::vector<uint64_t>{5, 8});
  RationalField Q;
  auto r = roots_in_field(PolyRing<RationalField>(Q), {mpq_class(-1), mpq_class(-1), mpq_class(2)});
  CHECK(r == std::vector<mpq_class>{mpq_class(-1, 2), mpq_class(1)});
}

TEST_CASE("roots over Q with large coefficients") {
  RationalField Q;
  PolyRing<RationalField> R(Q);
  std::vector<mpq_class> rs = {mpq_class("123456789/1000"), mpq_class("-98765/4321"), mpq_class(0), mpq_class(7, 3)};
  auto a = R.mul(R.from_roots(rs), std::vector<mpq_class>{mpq_class(1), mpq_class(0), mpq_class(1)});
  a = R.mul(a, R.from_roots({rs[1]}));
  auto got = roots_in_field(R, a);
  std::sort(rs.begin(), rs.end());
  CHECK(got == rs);
}

TEST_CASE("roots agree with exhaustive scan for q <= 200") {
  for (uint64_t p : {2ull, 3ull, 5ull, 13ull, 101ull, 199ull}) check_roots_exhaustive(PrimeField(p), 30, p);
  check_roots_exhaustive(make_gf(2, 3, 1), 30, 8);
  check_roots_exhaustive(make_gf(2, 7, 1), 20, 128);
  check_roots_exhaustive(make_gf(3, 2, 1), 30, 9);
  check_roots_exhaustive(make_gf(5, 3, 1), 20, 125);
  check_roots_exhaustive(make_gf(13, 2, 1), 20, 169);
}

TEST_CASE("nth_root") {
  RationalField Q;
  CHECK(*nth_root(Q, mpq_class(1), 5) == 1);
  CHECK(*nth_root(Q, mpq_class(4), 2) == 2);
  CHECK(*nth_root(Q, mpq_class(-8, 27), 3) == mpq_class(-2, 3));
  CHECK_FALSE(nth_root(Q, mpq_class(2), 2));
  CHECK_FALSE(nth_root(Q, mpq_class(-4), 2));
  PrimeField f13(13);
  // 3 = 2^4 mod 13
  auto r = nth_root(f13, uint64_t(3), 4);
  bool exists = false;
  for (uint64_t x = 0; x < 13; ++x) exists = exists || f13.pow(x, 4) == 3;
  CHECK(exists == r.has_value());
  if (r) CHECK(f13.pow(*r, 4) == 3);
  for (uint64_t p : {2ull, 3ull, 7ull, 13ull, 97ull, 193ull}) check_nth_root_exhaustive(PrimeField(p));
  check_nth_root_exhaustive(make_gf(3, 2, 2));
  check_nth_root_exhaustive(make_gf(2, 6, 2));
  check_nth_root_exhaustive(make_gf(7, 2, 2));
  PrimeField big(998244353);
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    uint64_t x = big.random(rng);
    unsigned long n = 1 + rng() % 64;
    auto y = nth_root(big, big.pow(x, n), n);
    REQUIRE(y);
    CHECK(big.pow(*y, n) == big.pow(x, n));
  }
}

TEST_CASE("frobenius") {
  PrimeField f5(5);
  CHECK(f5.frobenius(3, 1) == 3);
  ExtField F9(3, {1, 0, 1});
  auto t = F9.gen();
  CHECK(F9.frobenius(t, 1) == F9.neg(t));
  CHECK(F9.frobenius(t, 1) == power(F9, t, 3ll));
  ExtField F = make_gf(31, 5, 9);
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    auto a = F.random(rng), b = F.random(rng);
    unsigned s = 1 + rng() % 4;
    CHECK(F.frobenius(F.add(a, b), s) == F.add(F.frobenius(a, s), F.frobenius(b, s)));
    CHECK(F.frobenius(F.mul(a, b), s) == F.mul(F.frobenius(a, s), F.frobenius(b, s)));
    CHECK(F.frobenius(a, 5) == a);
  }
  CHECK(F.frobenius(F.gen(), 1) == power(F, F.gen(), 31ll));
}

TEST_CASE("build_extension") {
  PrimeField f7(7);
  auto e = build_extension(f7, {1, 0, 1});
  CHECK(e.field.size() == 49);
  CHECK(e.field.mul(e.root, e.root) == e.field.from_int(-1));

  PrimeField f2(2);
  // x^3 - 3x + 1 = x^3 + x + 1 mod 2
  PolyRing<PrimeField> R2(f2);
  CHECK(roots_in_field(R2, {1, 1, 0, 1}).empty());
  auto e8 = build_extension(f2, {1, 1, 0, 1});
  CHECK(e8.field.size() == 8);

  CHECK_THROWS_AS(build_extension(f7, {6, 0, 1}), PreconditionError);
  RationalField Q;
  CHECK_THROWS_AS(build_extension(Q, {mpq_class(1), mpq_class(0), mpq_class(1)}), CapabilityError);

  // tower flattening: F_25 then a cubic over it
  ExtField F25 = make_gf(5, 2, 3);
  PolyRing<ExtField> R25(F25);
  Rng rng(4);
  std::vector<ExtField::Elem> g;
  do g = R25.random(3, rng, true);
  while (!is_irreducible(R25, g));
  auto e2 = build_extension(F25, g, 5);
  CHECK(e2.field.degree() == 6);
  PolyRing<ExtField> RL(e2.field);
  CHECK(e2.field.is_zero(RL.eval(e2.embedding.map(g), e2.root)));
  auto& emb = e2.embedding;
  CHECK(emb.map(F25.one()) == e2.field.one());
  for (int i = 0; i < 300; ++i) {
    auto a = F25.random(rng), b = F25.random(rng);
    CHECK(emb.map(F25.add(a, b)) == e2.field.add(emb.map(a), emb.map(b)));
    CHECK(emb.map(F25.mul(a, b)) == e2.field.mul(emb.map(a), emb.map(b)));
    CHECK(*emb.preimage(emb.map(a)) == a);
  }
  CHECK_FALSE(emb.preimage(e2.root));
}
