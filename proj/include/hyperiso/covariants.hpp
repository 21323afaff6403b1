#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperiso/forms.hpp"

namespace hyperiso {

// (C1, C2)_h via the univariate formula; result has order r1 + r2 - 2h.
template <class K>
Form<K> transvectant(const FormOps<K>& ops, const Form<K>& c1, const Form<K>& c2, int h);

// (n!)^2/(n-2)! (f, f)_{n-2} by the closed-form coefficient sums
template <class K>
Form<K> c24_fast(const FormOps<K>& ops, const Form<K>& f);

// (f, f)_{n-2}, through c24_fast when n is even and >= 6
template <class K>
Form<K> c24(const FormOps<K>& ops, const Form<K>& f);

// Expression tree of transvectants and products of the ground form f.
struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

struct Recipe {
  enum class Op { Leaf, Tv, Mul };
  Op op = Op::Leaf;
  int h = 0;
  std::vector<RecipePtr> args;

  static RecipePtr leaf();
  static RecipePtr tv(RecipePtr a, RecipePtr b, int h);
  static RecipePtr mul(std::vector<RecipePtr> factors);

  int order(int n) const;
  int degree() const;
  std::string str() const;  // "(((f,f)_4,f)_6,f)_4"
};

// throws PreconditionError on an h exceeding an order
void check_recipe(const Recipe& r, int n);

template <class K>
class CovariantEvaluator {
 public:
  CovariantEvaluator(const FormOps<K>& ops, const Form<K>& f) : ops_(ops), f_(f) {}
  Form<K> eval(const RecipePtr& r);

 private:
  const FormOps<K>& ops_;
  Form<K> f_;
  std::map<std::string, Form<K>> memo_;
};

template <class K>
Form<K> eval_recipe(const FormOps<K>& ops, const RecipePtr& r, const Form<K>& f) {
  CovariantEvaluator<K> ev(ops, f);
  return ev.eval(r);
}

// Named covariants
namespace recipes {
RecipePtr c24(int n);  // (f, f)_{n-2}
RecipePtr c34(int n);  // ((f, f)_{n/2}, f)_{n-2}
RecipePtr c44();       // (((f,f)_4,f)_6,f)_4, octics
RecipePtr c44p();      // (((f,f)_4,f)_4,f)_6
RecipePtr c54();       // ((((f,f)_4,f)_6,f)_1,f)_7
RecipePtr c36();       // ((f,f)_4,f)_5
}  // namespace recipes

// Recipe of order o and degree d for forms of degree n. Generated recipes
// satisfy d = 1 + sum of the factor degrees; (4, 2) and (4, 3) return the
// named covariants above.
RecipePtr random_covariant(int n, int o, int d, Rng& rng);

// The covariant lists for genus 2 and 3 strata; flag set when the stratum has
// no usable order 4 or 6 covariant.
struct StratumList {
  std::vector<RecipePtr> recipes;
  bool no_covariant = false;
};
StratumList stratum_covariants(int genus, const std::string& aut_tag);

}  // namespace hyperiso
