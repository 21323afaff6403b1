#include "hyperiso/covariants.hpp"

#include <algorithm>
#include <functional>

namespace hyperiso {

namespace {

mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class fact(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// formal derivative of a coefficient vector, formal length kept
template <class K>
std::vector<typename K::Elem> dx(const K& k, const std::vector<typename K::Elem>& c) {
  if (c.size() <= 1) return {k.zero()};
  std::vector<typename K::Elem> r(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) r[i - 1] = k.mul(c[i], k.from_int(static_cast<long long>(i)));
  return r;
}

}  // namespace

template <class K>
Form<K> transvectant(const FormOps<K>& ops, const Form<K>& c1, const Form<K>& c2, int h) {
  const K& k = ops.field();
  const PolyRing<K>& R = ops.ring();
  const int r1 = c1.degree(), r2 = c2.degree();
  if (h < 0 || h > std::min(r1, r2)) throw PreconditionError("transvectant level exceeds an order");
  const int r = r1 + r2 - 2 * h;
  mpq_class scale(fact(h) * fact(r1 - h) * fact(r2 - h), fact(r1) * fact(r2));
  scale.canonicalize();
  const auto s = k.from_rational(scale);  // may raise CharacteristicObstruction

  std::vector<std::vector<typename K::Elem>> d1(h + 1), d2(h + 1);
  d1[0] = c1.a;
  d2[0] = c2.a;
  for (int j = 1; j <= h; ++j) {
    d1[j] = dx(k, d1[j - 1]);
    d2[j] = dx(k, d2[j - 1]);
  }
  std::vector<typename K::Elem> acc;
  for (int i = 0; i <= h; ++i) {
    mpz_class coef = binom(r2 - i, h - i) * binom(r1 - h + i, i);
    if (coef == 0) continue;
    if (i & 1) coef = -coef;
    auto prod = R.mul(trimmed(k, d1[h - i]), trimmed(k, d2[i]));
    acc = R.add(acc, R.scale(prod, k.from_mpz(coef)));
  }
  if (R.deg(acc) > r) throw Error("transvectant: leading terms failed to cancel");
  Form<K> out;
  out.a = R.scale(acc, s);
  out.a.resize(r + 1, k.zero());
  return out;
}

template <class K>
Form<K> c24_fast(const FormOps<K>& ops, const Form<K>& f) {
  const K& k = ops.field();
  const int n = f.degree();
  if (n < 6 || n % 2) throw PreconditionError("c24_fast needs even degree >= 6");
  if (k.characteristic() != 0 && k.characteristic() <= n)
    throw CharacteristicObstruction("c24_fast needs characteristic 0 or > n");
  using E = typename K::Elem;
  std::vector<E> fc(n + 1);
  fc[0] = k.one();
  for (int i = 1; i <= n; ++i) fc[i] = k.mul(fc[i - 1], k.from_int(i));
  const auto& a = f.a;
  auto I = [&](long long v) { return k.from_int(v); };
  E c[5] = {k.zero(), k.zero(), k.zero(), k.zero(), k.zero()};
  for (int j = 0; j <= n - 2; ++j) {
    E w = k.mul(fc[n - j], fc[j + 2]);
    if (j & 1) w = k.neg(w);
    c[0] = k.add(c[0], k.mul(w, k.mul(a[n - 2 - j], a[j])));
    E t1 = k.add(k.mul(I(n - 1 - j), k.mul(a[n - 1 - j], a[j])), k.mul(I(j + 1), k.mul(a[n - 2 - j], a[j + 1])));
    c[1] = k.add(c[1], k.mul(w, t1));
    E t2 = k.add(k.add(k.mul(I((j + 2) * (j + 1)), k.mul(a[j + 2], a[n - 2 - j])),
                       k.mul(I(2 * (n - 1 - j) * (j + 1)), k.mul(a[j + 1], a[n - 1 - j]))),
                 k.mul(I((n - j) * (n - 1 - j)), k.mul(a[j], a[n - j])));
    c[2] = k.add(c[2], k.mul(w, t2));
    E t3 = k.add(k.mul(I(n - 1 - j), k.mul(a[n - j], a[j + 1])), k.mul(I(j + 1), k.mul(a[n - 1 - j], a[j + 2])));
    c[3] = k.add(c[3], k.mul(w, t3));
    c[4] = k.add(c[4], k.mul(w, k.mul(a[n - j], a[j + 2])));
  }
  c[2] = k.div(c[2], I(2));
  Form<K> out;
  out.a.assign(c, c + 5);
  return out;
}

template <class K>
Form<K> c24(const FormOps<K>& ops, const Form<K>& f) {
  const int n = f.degree();
  const K& k = ops.field();
  if (n >= 6 && n % 2 == 0 && (k.characteristic() == 0 || k.characteristic() > n)) {
    // divide by (n!)^2/(n-2)!
    mpq_class s(fact(n - 2), fact(n) * fact(n));
    s.canonicalize();
    return ops.scale(c24_fast(ops, f), k.from_rational(s));
  }
  return transvectant(ops, f, f, n - 2);
}

RecipePtr Recipe::leaf() {
  static const RecipePtr f = std::make_shared<const Recipe>();
  return f;
}

RecipePtr Recipe::tv(RecipePtr a, RecipePtr b, int h) {
  auto r = std::make_shared<Recipe>();
  r->op = Op::Tv;
  r->h = h;
  r->args = {std::move(a), std::move(b)};
  return r;
}

RecipePtr Recipe::mul(std::vector<RecipePtr> factors) {
  if (factors.size() == 1) return factors[0];
  auto r = std::make_shared<Recipe>();
  r->op = Op::Mul;
  r->args = std::move(factors);
  return r;
}

int Recipe::order(int n) const {
  switch (op) {
    case Op::Leaf:
      return n;
    case Op::Tv:
      return args[0]->order(n) + args[1]->order(n) - 2 * h;
    case Op::Mul: {
      int s = 0;
      for (auto& a : args) s += a->order(n);
      return s;
    }
  }
  return 0;
}

int Recipe::degree() const {
  if (op == Op::Leaf) return 1;
  int s = 0;
  for (auto& a : args) s += a->degree();
  return s;
}

std::string Recipe::str() const {
  switch (op) {
    case Op::Leaf:
      return "f";
    case Op::Tv:
      return "(" + args[0]->str() + "," + args[1]->str() + ")_" + std::to_string(h);
    case Op::Mul: {
      std::string s;
      for (size_t i = 0; i < args.size(); ++i) s += (i ? "*" : "") + args[i]->str();
      return "[" + s + "]";
    }
  }
  return "";
}

void check_recipe(const Recipe& r, int n) {
  for (auto& a : r.args) check_recipe(*a, n);
  if (r.op == Recipe::Op::Tv) {
    int o1 = r.args[0]->order(n), o2 = r.args[1]->order(n);
    if (r.h < 0 || r.h > std::min(o1, o2))
      throw PreconditionError("recipe " + r.str() + ": level exceeds an order for n = " + std::to_string(n));
  }
}

template <class K>
Form<K> CovariantEvaluator<K>::eval(const RecipePtr& r) {
  if (r->op == Recipe::Op::Leaf) return f_;
  const std::string key = r->str();
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Form<K> out;
  const int n = f_.degree();
  if (r->op == Recipe::Op::Tv) {
    if (r->args[0]->op == Recipe::Op::Leaf && r->args[1]->op == Recipe::Op::Leaf && r->h == n - 2) {
      out = c24(ops_, f_);
    } else {
      Form<K> a = eval(r->args[0]);
      Form<K> b = eval(r->args[1]);
      out = transvectant(ops_, a, b, r->h);
    }
  } else {
    out = eval(r->args[0]);
    for (size_t i = 1; i < r->args.size(); ++i) out = ops_.mul(out, eval(r->args[i]));
  }
  memo_.emplace(key, out);
  return out;
}

namespace recipes {
namespace {
RecipePtr F() { return Recipe::leaf(); }
RecipePtr T(RecipePtr a, RecipePtr b, int h) { return Recipe::tv(std::move(a), std::move(b), h); }
}  // namespace
RecipePtr c24(int n) { return T(F(), F(), n - 2); }
RecipePtr c34(int n) { return T(T(F(), F(), n / 2), F(), n - 2); }
RecipePtr c44() { return T(T(T(F(), F(), 4), F(), 6), F(), 4); }
RecipePtr c44p() { return T(T(T(F(), F(), 4), F(), 4), F(), 6); }
RecipePtr c54() { return T(T(T(T(F(), F(), 4), F(), 6), F(), 1), F(), 7); }
RecipePtr c36() { return T(T(F(), F(), 4), F(), 5); }
}  // namespace recipes

namespace {

RecipePtr generate(int n, int o, int d, Rng& rng, int depth) {
  if (d == 1) return o == n ? Recipe::leaf() : nullptr;
  if (depth > 6) return nullptr;
  for (int attempt = 0; attempt < 64; ++attempt) {
    // split d - 1 into one or two factor degrees
    int m = (d - 1 >= 2 && rng() % 3 == 0) ? 2 : 1;
    std::vector<int> parts;
    if (m == 1) {
      parts = {d - 1};
    } else {
      int a = 1 + static_cast<int>(rng() % (d - 2));
      parts = {a, d - 1 - a};
    }
    std::vector<int> orders;
    int S = 0;
    bool ok = true;
    for (int dp : parts) {
      int lo = std::max(0, o - n), hi = std::min(n * dp, n + o);
      if (lo > hi) {
        ok = false;
        break;
      }
      int op = lo + static_cast<int>(rng() % (hi - lo + 1));
      if ((n * dp - op) % 2) op += (op < hi ? 1 : -1);
      if (op < 0 || (n * dp - op) % 2) {
        ok = false;
        break;
      }
      orders.push_back(op);
      S += op;
    }
    if (!ok || (n + S - o) % 2) continue;
    int h = (n + S - o) / 2;
    if (h < 0 || h > std::min(n, S)) continue;
    std::vector<RecipePtr> fs;
    for (size_t i = 0; i < parts.size() && ok; ++i) {
      auto c = generate(n, orders[i], parts[i], rng, depth + 1);
      if (!c) ok = false;
      fs.push_back(c);
    }
    if (!ok) continue;
    // (f, f)_h vanishes for odd h
    if (fs.size() == 1 && fs[0]->op == Recipe::Op::Leaf && (h & 1)) continue;
    return Recipe::tv(Recipe::mul(fs), Recipe::leaf(), h);
  }
  return nullptr;
}

}  // namespace

RecipePtr random_covariant(int n, int o, int d, Rng& rng) {
  if (o < 0 || d < 1 || o > n * d) throw PreconditionError("covariant order/degree out of range");
  if ((n * d - o) % 2) throw PreconditionError("n d - o is odd: every such covariant vanishes");
  if (o == 4 && d == 2 && n >= 3) return recipes::c24(n);
  if (o == 4 && d == 3 && n % 2 == 0 && n >= 4) return recipes::c34(n);
  auto r = generate(n, o, d, rng, 0);
  if (!r) throw PreconditionError("no covariant recipe found for this order and degree");
  return r;
}

StratumList stratum_covariants(int genus, const std::string& tag) {
  using namespace recipes;
  StratumList s;
  if (genus == 3) {
    if (tag == "D4") s.recipes = {c24(8), c34(8), c44(), c44p(), c54()};
    else if (tag == "C4") s.recipes = {c24(8), c34(8), c44(), c44p()};
    else if (tag == "C2^3") s.recipes = {c24(8), c34(8), c44()};
    else if (tag == "C2xC4") s.recipes = {c34(8)};
    else if (tag == "D12" || tag == "U6") s.recipes = {c36()};
    else if (tag == "C2xD8" || tag == "C14" || tag == "V8" || tag == "C2xS4") s.no_covariant = true;
    else throw PreconditionError("unknown genus 3 stratum " + tag);
    return s;
  }
  if (genus == 2) {
    auto F = Recipe::leaf();
    auto g2 = Recipe::tv(Recipe::tv(Recipe::tv(F, F, 2), F, 4), F, 4);
    auto g3 = Recipe::tv(Recipe::tv(Recipe::tv(Recipe::tv(F, F, 2), F, 3), F, 2), F, 6);
    if (tag == "D8") s.recipes = {c24(6)};
    else if (tag == "D4") s.recipes = {c24(6), g2, g3};
    else if (tag == "D12" || tag == "C10" || tag == "C2xD12" || tag == "GL2(3)" || tag == "C2xS4" ||
             tag == "C3:D8" || tag == "C3xD4")
      s.no_covariant = true;
    else throw PreconditionError("unknown genus 2 stratum " + tag);
    return s;
  }
  throw PreconditionError("stratum lists exist for genus 2 and 3 only");
}

#define HYPERISO_COV(K)                                                                      \
  template Form<K> transvectant<K>(const FormOps<K>&, const Form<K>&, const Form<K>&, int); \
  template Form<K> c24_fast<K>(const FormOps<K>&, const Form<K>&);                          \
  template Form<K> c24<K>(const FormOps<K>&, const Form<K>&);                               \
  template class CovariantEvaluator<K>;

HYPERISO_COV(RationalField)
HYPERISO_COV(PrimeField)
HYPERISO_COV(ExtField)

}  // namespace hyperiso
