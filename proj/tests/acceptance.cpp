// One line per acceptance criterion. Exit status is nonzero when a criterion
// fails for a reason other than an input that is degenerate at the requested prime.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hyperiso/bench.hpp"
#include "hyperiso/descent.hpp"
#include "hyperiso/moduli.hpp"

using namespace hyperiso;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  bool unattainable = false;  // failed only on inputs that degenerate modulo p
  std::string detail;
};

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
    if (!ops.is_zero(f) && !ops.field().is_zero(ops.discriminant(f)) && ops.distinct_roots(f) == n) return f;
  }
}

template <class K>
bool same_set(const FormOps<K>& ops, const IsomResult<K>& a, const IsomResult<K>& b) {
  if (a.size() != b.size()) return false;
  for (auto& m : a.matrices)
    if (std::none_of(b.matrices.begin(), b.matrices.end(), [&](const Moebius<K>& x) { return ops.proj_equal(x, m); }))
      return false;
  return true;
}

std::string fmt_s(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

Outcome oracle_equivalence() {
  auto t0 = Clock::now();
  long pairs = 0, mismatches = 0, fallbacks = 0;
  for (uint64_t p : {5, 7, 11}) {
    PrimeField k(p);
    FormOps<PrimeField> ops(k);
    Rng rng(1000 + p);
    for (int t = 0; t < 700; ++t) {
      const int n = 4 + t % 7;
      auto f1 = random_separable(ops, n, rng);
      auto f2 = t % 2 ? ops.act(random_gl2(ops, rng), f1) : random_separable(ops, n, rng);
      auto orc = oracle_isom(ops, f1, f2);
      auto fast = is_gl2_equiv_fast(ops, f1, f2);
      auto cov = is_gl2_equiv_covariant(ops, f1, f2);
      fallbacks += fast.fallback;
      mismatches += !same_set(ops, fast, orc) + !same_set(ops, cov, orc);
      ++pairs;
    }
  }
  const double dt = since(t0);
  return {mismatches == 0 && dt < 600,
          false,
          std::to_string(pairs) + " pairs over F_5, F_7, F_11, degrees 4..10; " + std::to_string(mismatches) +
              " mismatches (fast and covariant vs enumeration); " + std::to_string(fallbacks) +
              " fast-method enumerations (p | n); " + fmt_s(dt)};
}

template <class K>
long covariance_failures(const K& k, const RecipePtr& r, int n, int trials, uint64_t seed,
                         const std::function<Moebius<K>(const FormOps<K>&, Rng&)>& mat) {
  FormOps<K> ops(k);
  Rng rng(seed);
  const long long w = (static_cast<long long>(n) * r->degree() - r->order(n)) / 2;
  long bad = 0;
  for (int t = 0; t < trials; ++t) {
    auto f = ops.random(n, rng);
    auto M = mat(ops, rng);
    auto lhs = eval_recipe(ops, r, ops.act(M, f));
    auto rhs = ops.scale(ops.act(M, eval_recipe(ops, r, f)), power(k, ops.det(M), -w));
    bad += !(lhs == rhs);
  }
  return bad;
}

Outcome covariance_law() {
  using namespace recipes;
  auto t0 = Clock::now();
  long checks = 0, bad = 0;
  PrimeField k(1009);
  RationalField Q;
  auto small = [](const FormOps<RationalField>& ops, Rng& rng) {
    for (;;) {
      auto e = [&] { return mpq_class(static_cast<long>(rng() % 7) - 3); };
      Moebius<RationalField> m{e(), e(), e(), e()};
      if (ops.det(m) != 0) return m;
    }
  };
  for (int n : {6, 8}) {
    std::vector<RecipePtr> rs = {c24(n), c34(n)};
    const std::vector<std::string> tags = n == 6 ? std::vector<std::string>{"D8", "D4"}
                                                 : std::vector<std::string>{"D4", "C4", "C2^3", "C2xC4", "D12"};
    for (auto& tag : tags)
      for (auto& r : stratum_covariants(n == 6 ? 2 : 3, tag).recipes)
        if (std::none_of(rs.begin(), rs.end(), [&](const RecipePtr& x) { return x->str() == r->str(); }))
          rs.push_back(r);
    for (auto& r : rs) {
      bad += covariance_failures<PrimeField>(k, r, n, 300, 7 * n, random_gl2<PrimeField>);
      bad += covariance_failures<RationalField>(Q, r, n, 300, 11 * n, small);
      checks += 600;
    }
  }
  return {bad == 0, false,
          std::to_string(checks) + " checks over F_1009 and Q, n = 6, 8, named and stratum recipes; " +
              std::to_string(bad) + " failures; " + fmt_s(since(t0))};
}

// root permutations preserving the cross ratio, over the splitting field
int geometric_stabilizer(const PrimeField& k, const Form<PrimeField>& q, const std::vector<Extension<PrimeField>>& exts) {
  std::vector<std::pair<ExtField::Elem, ExtField::Elem>> pts;
  const Extension<PrimeField>* L = nullptr;
  const bool at_inf = k.is_zero(q.a[4]);
  for (auto& e : exts) {
    PolyRing<ExtField> R(e.field);
    auto d = e.embedding.map(q.a);
    while (!d.empty() && e.field.is_zero(d.back())) d.pop_back();
    auto rs = roots_in_field(R, d);
    if (static_cast<int>(rs.size()) + at_inf == 4) {
      L = &e;
      for (auto& r : rs) pts.push_back({r, e.field.one()});
      if (at_inf) pts.push_back({e.field.one(), e.field.zero()});
      break;
    }
  }
  if (!L) return -1;
  const ExtField& F = L->field;
  auto br = [&](int a, int b) { return F.sub(F.mul(pts[a].first, pts[b].second), F.mul(pts[b].first, pts[a].second)); };
  auto cr = [&](int a, int b, int c, int d) { return F.div(F.mul(br(a, c), br(b, d)), F.mul(br(a, d), br(b, c))); };
  std::vector<int> s{0, 1, 2, 3};
  const auto base = cr(0, 1, 2, 3);
  int count = 0;
  do count += cr(s[0], s[1], s[2], s[3]) == base;
  while (std::next_permutation(s.begin(), s.end()));
  return count;
}

Outcome quartic_classification() {
  auto t0 = Clock::now();
  long forms = 0, bad = 0;
  int by_order[13] = {};
  for (uint64_t p : {11, 13}) {
    PrimeField k(p);
    FormOps<PrimeField> ops(k);
    std::vector<Extension<PrimeField>> exts;
    for (unsigned d = 1; d <= 4; ++d) exts.push_back(extension_of_degree(k, d, 5));
    // every quartic up to scalars: first nonzero coefficient (from x^4 down) equal to 1
    for (uint64_t idx = 0; idx < p * p * p * p * p; ++idx) {
      Form<PrimeField> q{std::vector<uint64_t>(5)};
      uint64_t v = idx;
      for (int i = 0; i < 5; ++i) q.a[i] = v % p, v /= p;
      int top = 4;
      while (top >= 0 && q.a[top] == 0) --top;
      if (top < 3 || q.a[top] != 1) continue;
      if (k.is_zero(ops.discriminant(q))) continue;
      ++forms;
      const int want = geometric_stabilizer(k, q, exts);
      const int got = group_order(quartic_aut_group(k, q));
      bad += want != got;
      if (want > 0 && want <= 12) ++by_order[want];
    }
  }
  const double dt = since(t0);
  return {bad == 0 && dt < 60, false,
          std::to_string(forms) + " separable quartics over F_11 and F_13 (orders 12/8/4: " +
              std::to_string(by_order[12]) + "/" + std::to_string(by_order[8]) + "/" + std::to_string(by_order[4]) +
              "); " + std::to_string(bad) + " mismatches; " + fmt_s(dt)};
}

Outcome c24_nonsingular() {
  RationalField Q;
  FormOps<RationalField> ops(Q);
  bool ok = true;
  std::string vals;
  for (int n : {6, 8, 10, 12}) {
    Form<RationalField> f{std::vector<mpq_class>(n + 1, mpq_class(0))};
    f.a[0] = -1, f.a[1] = -1, f.a[n - 1] = 1, f.a[n] = 1;
    auto c = transvectant(ops, f, f, n - 2);
    mpq_class expect = 64 * (n - 3) * (n - 2) * (n * n + 3 * n + 6);
    mpz_class n6 = 1;
    for (int i = 0; i < 6; ++i) n6 *= n;
    expect /= n6;
    Form<RationalField> cubic{std::vector<mpq_class>(c.a.begin(), c.a.begin() + 4)};
    const auto dq = ops.discriminant(c), dc = ops.discriminant(cubic);
    ok = ok && dq != 0 && dc == expect && dq == c.a[3] * c.a[3] * expect;
    vals += (vals.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + dc.get_str();
  }
  return {ok, false, "disc of C24(f)(x,1) equals 64(n-3)(n-2)(n^2+3n+6)/n^6 with normalization constant 1 (" + vals + ")"};
}

Outcome remark_vector() {
  bool ok = true;
  std::string primes;
  for (uint64_t p : {23, 29, 37}) {
    PrimeField k(p);
    FormOps<PrimeField> ops(k);
    PolyRing<PrimeField> R(k);
    auto q = [&](const char* s) { return k.from_rational(mpq_class(s)); };
    auto rs = roots_in_field(R, {q("16/9"), 2, 1});
    ok = ok && rs.size() == 2;
    Form<PrimeField> target{{q("16/49"), 0, q("992/441"), 0, q("16/49")}};
    for (auto r : rs) {
      auto f = ops.mul(Form<PrimeField>{{1, 0, r, 0, 1}}, Form<PrimeField>{{1, 0, k.neg(k.mul(3, r)), 0, 1}});
      auto c = transvectant(ops, f, f, 6);
      ok = ok && c == target && !is_gl2_equiv_fast(ops, c, target).empty();
    }
    primes += (primes.empty() ? "" : ", ") + std::to_string(p);
  }
  return {ok, false, "(f,f)_6 equals 16/49 x^4 + 992/441 x^2 z^2 + 16/49 z^4 exactly for both roots r at p = " + primes};
}

Outcome genus3_descent() {
  auto t0 = Clock::now();
  int primes = 0, cases = 0, good = 0;
  for (uint64_t p = 11; primes < 3; ++p) {
    if (!nt::is_prime(p)) continue;
    PrimeField k(p);
    FormOps<PrimeField> ops(k);
    PolyRing<PrimeField> R(k);
    auto q = [&](const char* s) { return k.from_rational(mpq_class(s)); };
    std::vector<uint64_t> cubic;
    try {
      cubic = {q("-18375/64"), q("1925/16"), q("-35/2"), 1};
      q("1/12250"), q("1/160");
    } catch (const Error&) {
      continue;
    }
    auto roots = roots_in_field(R, cubic);
    if (roots.size() != 3) continue;
    ++primes;
    Form<PrimeField> paper{{q("-9696875"), q("-2225000"), q("3010000"), q("-91000"), q("64750"), q("-2800"), q("-560"),
                            q("160"), 1}};
    for (auto a : roots) {
      ++cases;
      auto a2 = k.mul(a, a);
      auto lin = [&](long c2, long c1, long c0, const char* d) {
        return k.mul(k.add(k.add(k.mul(k.from_int(c2), a2), k.mul(k.from_int(c1), a)), k.from_int(c0)), q(d));
      };
      Form<PrimeField> f{std::vector<uint64_t>(9, 0)};
      f.a[8] = lin(-32, 420, -2275, "1/160");
      f.a[6] = lin(-12, 140, -700, "1/25");
      f.a[4] = a;
      f.a[2] = 1;
      f.a[0] = lin(16, 280, -2275, "1/12250");
      try {
        auto d = covariant_descend(ops, make_curve(ops, f));
        bool ok = d.found && d.covariant == "(f,f)_6" && d.I == q("-75/49") && d.J == q("-2025/343") &&
                  d.target == Form<PrimeField>{{q("25/9"), q("25/9"), 0, 1, 0}} && d.model &&
                  !is_gl2_equiv_fast(ops, *d.model, paper).empty();
        good += ok;
      } catch (const Error&) {
      }
    }
  }
  const double dt = since(t0);
  return {good == cases && dt < 300, false,
          std::to_string(good) + "/" + std::to_string(cases) +
              " (prime, alpha) cases reproduce I, J, the quartic target and a model F_p-equivalent to the printed one; " +
              fmt_s(dt)};
}

Outcome genus5_family() {
  auto t0 = Clock::now();
  const char* pc[] = {"-3006656143858472317763973580984260681", "249511197641168404939510946041515184",
                      "-7423912080663182513045938205161326", "86331359417888600607650948443656",
                      "93749472927036312839424054441", "-9718847083908693649803959136",
                      "44148454149188354317253820", "130792088864772419461200", "2005635519424553708745",
                      "-15421975495507360656", "-66659816245812750", "-296949924611352", "199950247575"};
  auto check = [&](uint64_t p, std::string& why) {
    PrimeField k(p);
    FormOps<PrimeField> ops(k);
    Form<PrimeField> paper;
    for (auto s : pc) paper.a.push_back(k.from_rational(mpq_class(s)));
    const bool paper_singular = k.is_zero(ops.discriminant(paper));
    try {
      auto h = genus5_family_descend(1, 2, 3, p);
      if (paper_singular) {
        why = "printed model singular, descended model has " + std::to_string(ops.distinct_roots(h)) + " distinct roots";
        return ops.distinct_roots(h) == 12 ? 2 : 1;
      }
      return is_gl2_equiv(ops, h, paper).empty() ? 1 : 0;
    } catch (const PreconditionError& e) {
      why = std::string(e.what()) + (paper_singular ? "; printed model singular" : "");
      return paper_singular ? 2 : 1;
    }
  };
  std::string detail;
  bool pass = true, attainable_fail = false;
  for (uint64_t p : {17, 19, 37}) {
    std::string why;
    int r = check(p, why);
    detail += "p=" + std::to_string(p) + (r == 0 ? " equivalent" : r == 2 ? " degenerate (" + why + ")" : " NOT equivalent") + "; ";
    pass = pass && r == 0;
    attainable_fail = attainable_fail || r == 1;
  }
  std::string extra;
  for (uint64_t p : {53, 71, 73}) {
    std::string why;
    extra += std::to_string(p) + (check(p, why) == 0 ? " equivalent" : " not equivalent") + (p == 73 ? "" : ", ");
  }
  const double dt = since(t0);
  pass = pass && dt < 600;
  return {pass, !pass && !attainable_fail, detail + "other split primes: " + extra + "; " + fmt_s(dt)};
}

Outcome hilbert90_round_trip() {
  auto t0 = Clock::now();
  struct G {
    uint64_t p;
    unsigned r, s;
  };
  int total = 0, good = 0, twists = 0;
  for (G g : {G{101, 2, 1}, G{101, 4, 2}, G{1009, 3, 1}}) {
    ExtField top = make_gf(g.p, g.r, 3);
    ExtField sub = g.s == 1 ? ExtField(g.p, {0, 1}) : make_gf(g.p, g.s, 5);
    auto emb = embed_into(sub, top);
    FormOps<ExtField> ops(top), sops(sub);
    Rng rng(g.p * 10 + g.r);
    for (int t = 0; t < 50; ++t) {
      ++total;
      auto gs = random_separable(sops, 6 + 2 * (t % 3), rng);
      auto f = ops.act(random_gl2(ops, rng), Form<ExtField>{emb.map(gs.a)});
      try {
        auto c = build_cocycle(top, f, g.s);
        if (!c) continue;
        auto d = hilbert90_descend(*c, t);
        FormOps<ExtField> opt(c->top);
        auto emb_model = embed_into(d.sub, c->top);
        Form<ExtField> lifted{emb_model.map(d.model.a)};
        bool ok = lifted == d.model_top && d.sub.degree() == g.s && !is_gl2_equiv_fast(opt, d.model_top, c->f).empty();
        good += ok;
        twists += d.twist;
      } catch (const Error&) {
      }
    }
  }
  return {good == total, false,
          std::to_string(good) + "/" + std::to_string(total) +
              " coboundaries over (101,2,1), (101,4,2), (1009,3,1) give a subfield model equivalent over the top field (" +
              std::to_string(twists) + " quadratic twists flagged); " + fmt_s(since(t0))};
}

Outcome scaling() {
  BenchConfig cfg;
  cfg.gs = {64, 128, 256, 512, 1024};
  cfg.trials = 7;
  cfg.seed = 2024;
  auto rows = bench_table(cfg);
  auto t = [&](const std::string& m, int g) {
    for (auto& r : rows)
      if (r.method == m && r.g == g) return r.median;
    return -1.0;
  };
  bool ok = true;
  int failures = 0;
  for (auto& r : rows) failures += r.failures + r.capped;
  ok = failures == 0 && t("covariant", 1024) < 60;
  std::string ratios;
  for (const std::string m : {"fast", "covariant"}) {
    ratios += m + " ratios";
    for (int g = 64; g <= 512; g *= 2) {
      double q = t(m, 2 * g) / t(m, g);
      ok = ok && q <= 3;
      char buf[16];
      std::snprintf(buf, sizeof buf, " %.2f", q);
      ratios += buf;
    }
    ratios += "; ";
  }
  const double speedup = t("fast", 1024) / t("covariant", 1024);
  ok = ok && speedup >= 5;
  char buf[160];
  std::snprintf(buf, sizeof buf, "g=1024 medians: fast %.3f s, covariant %.4f s, speedup %.1fx; ", t("fast", 1024),
                t("covariant", 1024), speedup);
  return {ok, false, std::string(buf) + ratios + std::to_string(failures) + " incorrect runs"};
}

Outcome moduli_invariance() {
  auto t0 = Clock::now();
  long checks = 0, bad = 0;
  PrimeField k(1009);
  FormOps<PrimeField> ops(k);
  Rng rng(77);
  for (int n : {4, 6, 8}) {
    for (int t = 0; t < 500; ++t) {
      auto f = random_separable(ops, n, rng);
      auto l = k.random(rng);
      if (l == 0) l = 1;
      auto g = ops.scale(ops.act(random_gl2(ops, rng), f), l);
      bad += field_of_moduli(ops, f).representative != field_of_moduli(ops, g).representative;
      ++checks;
    }
  }
  ExtField K3 = make_gf(31, 3, 2);
  FormOps<ExtField> op3(K3);
  long frob = 0;
  for (int n : {4, 6, 8}) {
    for (int t = 0; t < 100; ++t) {
      auto f = random_separable(op3, n, rng);
      auto r = field_of_moduli(op3, f).representative;
      auto rs = field_of_moduli(op3, op3.frobenius(f, 1)).representative;
      for (auto& v : r) v = K3.frobenius(v, 1);
      bad += r != rs;
      ++frob;
    }
  }
  return {bad == 0, false,
          std::to_string(checks) + " (lambda, M) pairs over F_1009 and " + std::to_string(frob) +
              " Frobenius checks over F_31^3, n = 4, 6, 8; " + std::to_string(bad) + " failures; " + fmt_s(since(t0))};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion all[] = {
      {1, "oracle equivalence", oracle_equivalence},     {2, "covariance law", covariance_law},
      {3, "quartic classification", quartic_classification}, {4, "generic C24 non-singularity", c24_nonsingular},
      {5, "remark test vector", remark_vector},          {6, "genus 3 C2^3 descent", genus3_descent},
      {7, "genus 5 family", genus5_family},              {8, "Hilbert 90 round trip", hilbert90_round_trip},
      {9, "scaling", scaling},                           {10, "moduli invariance", moduli_invariance},
  };
  int hard_failures = 0;
  for (auto& c : all) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d (%s): %s  %s\n", c.id, c.name,
                o.pass ? "PASS" : (o.unattainable ? "FAIL (unattainable)" : "FAIL"), o.detail.c_str());
    std::fflush(stdout);
    hard_failures += !o.pass && !o.unattainable;
  }
  return hard_failures ? 1 : 0;
}
