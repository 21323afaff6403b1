#include <doctest.h>

#include "hyperiso/covariants.hpp"

using namespace hyperiso;

namespace {

template <class K>
Moebius<K> random_gl2(const FormOps<K>& ops, Rng& rng) {
  const K& k = ops.field();
  for (;;) {
    Moebius<K> m{k.random(rng), k.random(rng), k.random(rng), k.random(rng)};
    if (!k.is_zero(ops.det(m))) return m;
  }
}

mpz_class fact(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

template <class K>
void check_covariance(const K& k, const RecipePtr& r, int n, int trials, uint64_t seed) {
  FormOps<K> ops(k);
  Rng rng(seed);
  const int d = r->degree(), o = r->order(n);
  const long long w = (static_cast<long long>(n) * d - o) / 2;
  for (int t = 0; t < trials; ++t) {
    auto f = ops.random(n, rng);
    auto M = random_gl2(ops, rng);
    auto lhs = eval_recipe(ops, r, ops.act(M, f));
    auto rhs = ops.scale(ops.act(M, eval_recipe(ops, r, f)), power(k, ops.det(M), -w));
    CHECK_MESSAGE(lhs == rhs, r->str());
  }
}

}  // namespace

TEST_CASE("transvectant basics") {
  PrimeField k(1009);
  FormOps<PrimeField> ops(k);
  Rng rng(1);
  auto f = ops.random(6, rng), g = ops.random(5, rng);
  CHECK(transvectant(ops, f, g, 0) == ops.mul(f, g));
  for (int h : {1, 3, 5}) CHECK(ops.is_zero(transvectant(ops, f, f, h)));
  CHECK(transvectant(ops, f, f, 4).degree() == 4);
  CHECK_THROWS_AS(transvectant(ops, f, g, 6), PreconditionError);
  // 5 divides 6!^2 / (4! 2! 2!)
  FormOps<PrimeField> ops5{PrimeField(5)};
  CHECK_THROWS_AS(transvectant(ops5, ops5.random(6, rng), ops5.random(6, rng), 4), CharacteristicObstruction);
}

TEST_CASE("(q, q)_4 of a quartic is I/6") {
  RationalField Q;
  FormOps<RationalField> ops(Q);
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    auto q = ops.random(4, rng);
    auto& a = q.a;
    mpq_class I = 12 * a[4] * a[0] - 3 * a[3] * a[1] + a[2] * a[2];
    auto c = transvectant(ops, q, q, 4);
    REQUIRE(c.degree() == 0);
    CHECK(c.a[0] == I / 6);
  }
}

TEST_CASE("c24_fast equals the scaled transvectant") {
  PrimeField k(1009);
  FormOps<PrimeField> ops(k);
  Rng rng(3);
  for (int n : {6, 8, 12}) {
    const auto s = k.from_mpz(fact(n) * fact(n) / fact(n - 2));
    for (int t = 0; t < 200; ++t) {
      auto f = ops.random(n, rng);
      auto slow = transvectant(ops, f, f, n - 2);
      CHECK(c24_fast(ops, f) == ops.scale(slow, s));
      CHECK(c24(ops, f) == slow);
    }
  }
  RationalField Q;
  FormOps<RationalField> opq(Q);
  for (int n : {6, 10, 14}) {
    auto f = opq.random(n, rng);
    mpq_class s = mpq_class(fact(n) * fact(n) / fact(n - 2));
    CHECK(c24_fast(opq, f) == opq.scale(transvectant(opq, f, f, n - 2), s));
  }
  // constant coefficient sequence
  Form<RationalField> ones{std::vector<mpq_class>(9, mpq_class(1))};
  auto c = c24(opq, ones);
  CHECK(c == transvectant(opq, ones, ones, 6));
  CHECK(c == opq.swap(c));
  CHECK_THROWS_AS(c24_fast(opq, Form<RationalField>{std::vector<mpq_class>(8, mpq_class(1))}), PreconditionError);
}

TEST_CASE("discriminant of C24(x^n + x^(n-1) z - x z^(n-1) - z^n)") {
  RationalField Q;
  FormOps<RationalField> ops(Q);
  for (int n : {6, 8, 10, 12}) {
    Form<RationalField> f{std::vector<mpq_class>(n + 1, mpq_class(0))};
    f.a[0] = -1, f.a[1] = -1, f.a[n - 1] = 1, f.a[n] = 1;
    auto c = transvectant(ops, f, f, n - 2);
    REQUIRE(c.degree() == 4);
    mpq_class expect = 64 * (n - 3) * (n - 2) * (n * n + 3 * n + 6);
    mpz_class n6 = 1;
    for (int i = 0; i < 6; ++i) n6 *= n;
    expect /= n6;
    CHECK(Q.is_zero(c.a[4]));
    auto cubic = Form<RationalField>{std::vector<mpq_class>(c.a.begin(), c.a.begin() + 4)};
    CHECK(ops.discriminant(cubic) == expect);
    CHECK(ops.discriminant(c) == c.a[3] * c.a[3] * expect);
    CHECK(ops.discriminant(c) != 0);
  }
}

TEST_CASE("covariance law") {
  using namespace recipes;
  PrimeField k(1009);
  RationalField Q;
  for (int n : {6, 8}) {
    std::vector<RecipePtr> rs = {c24(n), c34(n)};
    for (auto& r : stratum_covariants(n == 6 ? 2 : 3, "D4").recipes) rs.push_back(r);
    if (n == 8) rs.push_back(c36());
    for (auto& r : rs) {
      check_covariance(k, r, n, 60, 10 + n);
      check_covariance(Q, r, n, 8, 20 + n);
    }
  }
}

TEST_CASE("random_covariant") {
  Rng rng(4);
  CHECK(random_covariant(8, 4, 2, rng)->str() == recipes::c24(8)->str());
  CHECK(random_covariant(8, 4, 3, rng)->str() == recipes::c34(8)->str());
  CHECK_THROWS_AS(random_covariant(8, 3, 2, rng), PreconditionError);
  CHECK_THROWS_AS(random_covariant(7, 4, 3, rng), PreconditionError);
  PrimeField k(10007);
  FormOps<PrimeField> ops(k);
  for (int n : {6, 8, 10}) {
    auto f = ops.random(n, rng);
    for (int d = 2; d <= 5; ++d) {
      for (int o : {4, 6}) {
        if ((n * d - o) % 2) continue;
        RecipePtr r;
        try {
          r = random_covariant(n, o, d, rng);
        } catch (const PreconditionError&) {
          continue;
        }
        CHECK(r->order(n) == o);
        CHECK(r->degree() == d);
        auto c = eval_recipe(ops, r, f);
        CHECK(c.degree() == o);
      }
    }
  }
}

TEST_CASE("stratum lists") {
  for (auto tag : {"D4", "C4", "C2^3", "C2xC4", "D12", "U6"}) {
    auto s = stratum_covariants(3, tag);
    CHECK_FALSE(s.no_covariant);
    for (auto& r : s.recipes) {
      check_recipe(*r, 8);
      int o = r->order(8);
      CHECK((o == 4 || o == 6));
    }
  }
  CHECK(stratum_covariants(3, "C14").no_covariant);
  CHECK_THROWS_AS(stratum_covariants(3, "nonsense"), PreconditionError);
  CHECK(recipes::c44()->str() == "(((f,f)_4,f)_6,f)_4");
}
