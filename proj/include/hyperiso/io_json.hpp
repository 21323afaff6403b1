#pragma once

#include <json.hpp>
#include <variant>

#include "hyperiso/covariants.hpp"
#include "hyperiso/hyperelliptic.hpp"
#include "hyperiso/isom.hpp"

namespace hyperiso {

using json = nlohmann::json;
using AnyField = std::variant<RationalField, PrimeField, ExtField>;

// {"char": p, "deg": r, "modulus": [c0, ..., cr]}, "char": 0 for Q.
// A missing modulus for r > 1 picks a deterministic irreducible one.
AnyField field_from_json(const json& j);
json field_to_json(const FieldDesc& d);

// elements: decimal strings ("3/7"), integers, or coefficient arrays over F_{p^r}
template <class K>
typename K::Elem elem_from_json(const K& k, const json& j);
template <class K>
json elem_to_json(const K& k, const typename K::Elem& a);

// {"field": {...}, "degree": n, "coeffs": ["a0", ..., "an"]}, a_i the x^i z^(n-i) coefficient
template <class K>
Form<K> form_from_json(const K& k, const json& j);
template <class K>
json form_to_json(const K& k, const Form<K>& f);

// [[m11, m12], [m21, m22]]
template <class K>
Moebius<K> matrix_from_json(const K& k, const json& j);
template <class K>
json matrix_to_json(const K& k, const Moebius<K>& m);

template <class K>
json isom_to_json(const K& k, const IsomResult<K>& r);

// "f" | {"op": "tv", "h": 6, "args": [a, b]} | {"op": "mul", "args": [...]}
RecipePtr recipe_from_json(const json& j);
json recipe_to_json(const RecipePtr& r);

}  // namespace hyperiso
