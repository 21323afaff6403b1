#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperiso/hyperelliptic.hpp"
#include "hyperiso/quartic.hpp"

namespace hyperiso {

// Weil cocycle for sigma = Frob_{p^s} on F_{p^r}: maps[j] = M_{sigma^j}, with
// M_{sigma^(j+1)} = M_sigma^(sigma^j) M_{sigma^j} and M_{sigma^m} = id exactly.
struct Cocycle {
  ExtField top;
  unsigned s = 1;
  Form<ExtField> f;  // the input form, in the top field
  std::vector<Moebius<ExtField>> maps;
  bool enlarged = false;  // top is the quadratic extension of the input field
};

// checks act(M_sigma, f) ~ f^sigma and the closure; throws Error on failure
void verify_cocycle(const Cocycle& c);

std::optional<Cocycle> build_cocycle(const ExtField& k, const Form<ExtField>& f, unsigned s);

struct Descent {
  Moebius<ExtField> A;        // act(A, f) ~ model
  Form<ExtField> model_top;   // model, in the top field
  ExtField sub;               // F_{p^s}
  Form<ExtField> model;       // model over sub
  bool twist = false;         // model = nu act(A, f) with nu not a square
};

Descent hilbert90_descend(const Cocycle& c, uint64_t seed = 1, int budget = 64);

template <class K>
struct CovariantDescent {
  bool found = false;
  std::string diagnostic;
  std::string covariant;
  Form<K> c;
  typename K::Elem I{}, J{};
  Form<K> target;              // quartic_from_IJ(I, J)
  unsigned root_degree = 1;    // degree over K of the field of the root used
  unsigned ext_degree = 1;     // degree over K of the field of the model's coefficients
  std::optional<Moebius<K>> A;
  std::optional<Form<K>> model;
  std::optional<QuarticRootIso<K>> root_iso;
  std::optional<Form<ExtField>> model_ext;
};

// the recipes tried for a curve of this genus, in order
std::vector<RecipePtr> descent_covariants(int genus);

template <class K>
CovariantDescent<K> covariant_descend(const FormOps<K>& ops, const HyperellipticCurve<K>& X, uint64_t seed = 1);

// orientation of the family: roots (r1, r2, r3) of t^3 - 3t + 1 in F_p,
// and whether the denominator uses q_4 (as printed) or q_i
struct FamilyOrientation {
  int perm = 0;                 // index into the 6 orderings of the sorted roots
  bool printed_denominator = false;  // true: q4 - r1 in every factor, false: q_i - r1
};

Form<PrimeField> genus5_family_form(const mpq_class& q4, const mpq_class& q5, const mpq_class& q6, uint64_t p,
                                    const FamilyOrientation& o = {});
Form<PrimeField> genus5_family_descend(const mpq_class& q4, const mpq_class& q5, const mpq_class& q6, uint64_t p,
                                       const FamilyOrientation& o = {});

}  // namespace hyperiso
