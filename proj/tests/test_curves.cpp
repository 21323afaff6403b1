#include <doctest.h>

#include "hyperiso/hyperelliptic.hpp"
#include "hyperiso/moduli.hpp"
#include "hyperiso/quartic.hpp"

using namespace hyperiso;

namespace {

template <class K>
Form<K> mk(const K& k, std::vector<long long> c) {
  Form<K> f;
  for (auto v : c) f.a.push_back(k.from_int(v));
  return f;
}

template <class K>
Moebius<K> random_gl2(const FormOps<K>& ops, Rng& rng) {
  const K& k = ops.field();
  for (;;) {
    Moebius<K> m{k.random(rng), k.random(rng), k.random(rng), k.random(rng)};
    if (!k.is_zero(ops.det(m))) return m;
  }
}

template <class K>
Form<K> random_separable(const FormOps<K>& ops, int n, Rng& rng) {
  for (;;) {
    auto f = ops.random(n, rng);
    if (f.degree() == n && !ops.field().is_zero(ops.discriminant(f))) return f;
  }
}

// Number of root permutations preserving the cross ratio, over the splitting field:
// the geometric stabilizer of a separable quartic.
int geometric_stabilizer(const PrimeField& k, Form<PrimeField> q) {
  FormOps<PrimeField> ops(k);
  Rng rng(99);
  while (k.is_zero(q.a[4])) q = ops.act(random_gl2(ops, rng), q);
  auto L = extension_of_degree(k, 12);
  PolyRing<ExtField> R(L.field);
  auto rs = roots_in_field(R, L.embedding.map(q.a));
  REQUIRE(rs.size() == 4);
  const ExtField& F = L.field;
  auto cr = [&](int a, int b, int c, int d) {
    return F.div(F.mul(F.sub(rs[a], rs[c]), F.sub(rs[b], rs[d])), F.mul(F.sub(rs[a], rs[d]), F.sub(rs[b], rs[c])));
  };
  std::vector<int> s{0, 1, 2, 3};
  const auto base = cr(0, 1, 2, 3);
  int count = 0;
  do count += cr(s[0], s[1], s[2], s[3]) == base;
  while (std::next_permutation(s.begin(), s.end()));
  return count;
}

}  // namespace

TEST_CASE("quartic I, J") {
  RationalField Q;
  CHECK(quartic_IJ(Q, mk(Q, {1, 0, 0, 0, 1})) == std::make_pair(mpq_class(12), mpq_class(0)));
  CHECK(quartic_IJ(Q, mk(Q, {0, 1, 0, 1, 0})) == std::make_pair(mpq_class(-3), mpq_class(0)));
  Form<RationalField> q{{mpq_class(5, 7), mpq_class(-2, 3), 0, 1, 0}};
  CHECK(quartic_IJ(Q, q) == std::make_pair(mpq_class(2), mpq_class(-135, 7)));
  CHECK_THROWS_AS(quartic_IJ(PrimeField(3), mk(PrimeField(3), {1, 0, 0, 0, 1})), CharacteristicObstruction);
}

TEST_CASE("quartic from I, J") {
  RationalField Q;
  auto c = quartic_from_IJ(Q, mpq_class(-75, 49), mpq_class(-2025, 343));
  CHECK(c == Form<RationalField>{{mpq_class(25, 9), mpq_class(25, 9), 0, 1, 0}});
  CHECK(quartic_from_IJ(Q, mpq_class(1), mpq_class(0)) == mk(Q, {0, 1, 0, 1, 0}));
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    mpq_class I(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9), J(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9);
    if (I == 0 || J == 0) continue;
    auto [I2, J2] = quartic_IJ(Q, quartic_from_IJ(Q, I, J));
    CHECK(I2 * I2 * I2 * J * J == I * I * I * J2 * J2);
  }
}

TEST_CASE("quartic automorphism groups") {
  RationalField Q;
  CHECK(quartic_aut_group(Q, mk(Q, {0, -1, 0, 1, 0})) == QuarticAut::D8);
  PrimeField k(13);
  FormOps<PrimeField> ops(k);
  // zeta_3 = 3 mod 13; roots 0, 1, infinity, zeta_3 + 1
  auto q = ops.from_roots({0, 1, 4}, true);
  CHECK(quartic_aut_group(k, q) == QuarticAut::A4);
  Rng rng(2);
  for (int t = 0; t < 60; ++t) {
    auto f = random_separable(ops, 4, rng);
    auto g = quartic_aut_group(k, f);
    CHECK(group_order(g) == geometric_stabilizer(k, f));
    CHECK(oracle_isom(ops, f, f).size() <= static_cast<size_t>(group_order(g)));
  }
}

TEST_CASE("quartic isomorphism to the I, J model") {
  PrimeField k(1009);
  FormOps<PrimeField> ops(k);
  Rng rng(3);
  int rational = 0;
  for (int t = 0; t < 40; ++t) {
    auto q0 = random_separable(ops, 4, rng);
    auto [I, J] = quartic_IJ(k, q0);
    if (k.is_zero(I) || k.is_zero(J)) continue;
    auto target = quartic_from_IJ(k, I, J);
    auto q = ops.act(random_gl2(ops, rng), q0);
    auto ri = quartic_iso_over_root_field(ops, q);
    FormOps<ExtField> opl(ri.ext.field);
    Form<ExtField> qL{ri.ext.embedding.map(q.a)};
    CHECK(opl.is_proportional(opl.act(ri.M, qL), ri.target));
    CHECK(ri.target == Form<ExtField>{ri.ext.embedding.map(target.a)});
    CHECK(ri.degree <= 4);
    rational += ri.degree == 1;
  }
  CHECK(rational > 0);
  auto [I, J] = quartic_IJ(k, mk(k, {5, 5, 0, 1, 0}));
  auto t = quartic_from_IJ(k, I, J);
  CHECK(ops.is_proportional(t, mk(k, {5, 5, 0, 1, 0})));
}

TEST_CASE("normalizing exponents") {
  CHECK(normalizing_exponents({2, 2}, {true, true}) == std::vector<long>{1, 0});
  CHECK(normalizing_exponents({2, 3}, {true, true}) == std::vector<long>{-1, 1});
  CHECK(normalizing_exponents({2, 3}, {false, true}) == std::vector<long>{0, 1});
  CHECK_THROWS(normalizing_exponents({2, 3}, {false, false}));
  PrimeField k(101);
  auto r = canonical_representative(k, {k.from_int(7), k.from_int(9)}, {2, 2});
  CHECK(r == std::vector<uint64_t>{1, k.div(9, 7)});
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    std::vector<uint64_t> v{k.random(rng), k.random(rng), k.random(rng)};
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
    auto l = k.random(rng);
    if (l == 0) continue;
    std::vector<int> d{2, 3, 5};
    std::vector<uint64_t> w;
    for (int i = 0; i < 3; ++i) w.push_back(k.mul(v[i], power(k, l, d[i])));
    CHECK(canonical_representative(k, v, d) == canonical_representative(k, w, d));
  }
}

TEST_CASE("invariant profile and moduli invariance") {
  RationalField Q;
  FormOps<RationalField> opq(Q);
  auto prof = invariant_profile(opq, mk(Q, {1, 0, 0, 0, 1}));
  CHECK(prof.degrees == std::vector<int>{2, 3});
  CHECK(Q.is_zero(prof.values[1]));
  CHECK_FALSE(Q.is_zero(prof.values[0]));
  PrimeField k(1009);
  FormOps<PrimeField> ops(k);
  Rng rng(5);
  for (int n : {4, 6, 8}) {
    for (int t = 0; t < 20; ++t) {
      auto f = random_separable(ops, n, rng);
      auto l = k.random(rng);
      if (l == 0) continue;
      auto g = ops.scale(ops.act(random_gl2(ops, rng), f), l);
      CHECK(field_of_moduli(ops, f).representative == field_of_moduli(ops, g).representative);
    }
  }
  CHECK_THROWS(field_of_moduli(ops, mk(k, {0, 0, 0, 0, 1})));
}

TEST_CASE("field of moduli over extensions") {
  PrimeField k(31);
  FormOps<PrimeField> ops(k);
  ExtField k2 = make_gf(31, 2, 3);
  FormOps<ExtField> op2(k2);
  auto emb = embed_into(k, k2);
  Rng rng(6);
  int deg2 = 0;
  for (int t = 0; t < 10; ++t) {
    auto g = random_separable(ops, 6, rng);
    CHECK(field_of_moduli(ops, g).field_degree == 1);
    auto f = op2.act(random_gl2(op2, rng), Form<ExtField>{emb.map(g.a)});
    auto mp = field_of_moduli(op2, f);
    CHECK(mp.field_degree == 1);
    auto h = random_separable(op2, 6, rng);
    deg2 += field_of_moduli(op2, h).field_degree == 2;
  }
  CHECK(deg2 >= 8);
}

TEST_CASE("hyperelliptic curves") {
  PrimeField k(1009);
  FormOps<PrimeField> ops(k);
  auto X = make_curve(ops, mk(k, {-1, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(X.genus == 3);
  CHECK(X.f.degree() == 8);
  CHECK_THROWS_AS(make_curve(ops, mk(k, {0, 0, 1, 0, 0, 0, 1})), PreconditionError);
  CHECK_THROWS_AS(make_curve(ops, mk(k, {1, 0, 0, 1})), PreconditionError);
  FormOps<PrimeField> ops2{PrimeField(2)};
  CHECK_THROWS(make_curve(ops2, mk(ops2.field(), {1, 1, 0, 0, 0, 1})));
}

TEST_CASE("curve isomorphisms and twists") {
  PrimeField k(101);
  FormOps<PrimeField> ops(k);
  Rng rng(7);
  uint64_t u = 2;  // not a square mod 101
  REQUIRE_FALSE(nth_root(k, u, 2).has_value());
  for (int t = 0; t < 10; ++t) {
    auto f = random_separable(ops, 6, rng);
    auto X1 = make_curve(ops, f);
    auto M0 = random_gl2(ops, rng);
    auto e0 = k.random(rng);
    if (e0 == 0) continue;
    // act(M0, f) = e0^2 f2
    auto X2 = make_curve(ops, ops.scale(ops.act(M0, f), k.inv(k.mul(e0, e0))));
    auto r = curve_isoms(ops, X1, X2);
    auto want = canonical_iso(ops, CurveIso<PrimeField>{M0, e0}, 2);
    CHECK(std::find(r.isos.begin(), r.isos.end(), want) != r.isos.end());
    for (auto& c : r.isos) CHECK(ops.act(c.M, X1.f) == ops.scale(X2.f, k.mul(c.e, c.e)));

    auto self = curve_isoms(ops, X1, X1);
    auto aut = is_gl2_equiv(ops, f, f);
    long sq = 0;
    for (auto s : aut.scalars) sq += nth_root(k, s, 2).has_value();
    CHECK(self.isos.size() == static_cast<size_t>(2 * sq));

    auto Xt = make_curve(ops, ops.scale(f, u));
    auto tw = curve_isoms(ops, X1, Xt, true);
    if (aut.size() == 1) {
      CHECK(tw.isos.empty());
      CHECK(tw.twists.size() == 1);
      REQUIRE(tw.quad.has_value());
      CHECK(tw.quad_isos.size() == 2);
    }
  }
}

TEST_CASE("reduced automorphism orders of special strata") {
  struct Case {
    std::vector<long long> f;
    long order;
  };
  for (uint64_t p : {97ull, 113ull}) {
    PrimeField k(p);
    FormOps<PrimeField> ops(k);
    for (auto& c : {Case{{1, 0, 0, 0, 14, 0, 0, 0, 1}, 24}, Case{{-1, 0, 0, 0, 0, 0, 0, 1}, 7},
                    Case{{0, -1, 0, 0, 0, 0, 0, 1}, 12}}) {
      auto s = reduced_aut_order(ops, make_curve(ops, mk(k, c.f)), 4);
      CHECK(s.order == c.order);
    }
  }
}

TEST_CASE("genus 3 example: moduli point mod 11") {
  PrimeField k(11);
  auto q = [&](const char* s) { return k.from_rational(mpq_class(s)); };
  auto L = build_extension(k, std::vector<uint64_t>{q("-18375/64"), q("1925/16"), q("-35/2"), 1});
  const ExtField& F = L.field;
  FormOps<ExtField> ops(F);
  auto a = L.root, a2 = F.mul(a, a);
  auto lin = [&](long c2, long c1, long c0, const char* d) {
    auto v = F.add(F.add(F.mul(F.from_int(c2), a2), F.mul(F.from_int(c1), a)), F.from_int(c0));
    return F.mul(v, F.from_rational(mpq_class(d)));
  };
  Form<ExtField> f{std::vector<ExtField::Elem>(9, F.zero())};
  f.a[8] = lin(-32, 420, -2275, "1/160");
  f.a[6] = lin(-12, 140, -700, "1/25");
  f.a[4] = a;
  f.a[2] = F.one();
  f.a[0] = lin(16, 280, -2275, "1/12250");
  auto mp = field_of_moduli(ops, f);
  CHECK(mp.field_degree == 1);
  CHECK(mp.degrees[0] == 2);
  CHECK(mp.degrees[1] == 3);
  CHECK(F.is_zero(mp.representative[0]));
  CHECK(F.is_zero(mp.representative[1]));
}
