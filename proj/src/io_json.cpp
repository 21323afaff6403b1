#include "hyperiso/io_json.hpp"

#include "hyperiso/extension.hpp"

namespace hyperiso {

namespace {

mpq_class to_rational(const json& j) {
  if (j.is_number_integer()) return mpq_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpq_class v(j.get<std::string>());
    v.canonicalize();
    return v;
  }
  throw PreconditionError("expected an integer or a decimal string, got " + j.dump());
}

mpz_class to_integer(const json& j) {
  auto v = to_rational(j);
  if (v.get_den() != 1) throw PreconditionError("expected an integer, got " + j.dump());
  return v.get_num();
}

}  // namespace

AnyField field_from_json(const json& j) {
  const mpz_class p = to_integer(j.at("char"));
  const unsigned r = j.value("deg", 1u);
  if (p == 0) return RationalField{};
  if (!p.fits_ulong_p() || p >= (mpz_class(1) << 62)) throw CapabilityError("characteristic above 2^62");
  const uint64_t q = p.get_ui();
  if (!nt::is_prime(q)) throw PreconditionError("characteristic " + p.get_str() + " is not prime");
  if (r == 0) throw PreconditionError("field degree 0");
  if (r == 1 && !j.contains("modulus")) return PrimeField(q);
  if (!j.contains("modulus")) return make_gf(q, r, 1);
  PrimeField fp(q);
  std::vector<uint64_t> m;
  for (auto& c : j.at("modulus")) m.push_back(fp.from_mpz(to_integer(c)));
  if (m.size() != r + 1) throw PreconditionError("modulus must have deg + 1 coefficients");
  if (r == 1) return PrimeField(q);
  return ExtField(q, m);
}

json field_to_json(const FieldDesc& d) {
  json j{{"char", d.characteristic.get_str()}, {"deg", d.degree}};
  if (d.characteristic.fits_ulong_p()) j["char"] = d.characteristic.get_ui();
  if (!d.modulus.empty()) {
    json m = json::array();
    for (auto& c : d.modulus) m.push_back(c.get_ui());
    j["modulus"] = m;
  }
  return j;
}

template <class K>
typename K::Elem elem_from_json(const K& k, const json& j) {
  if constexpr (std::is_same_v<K, ExtField>) {
    if (j.is_array()) {
      if (j.size() > k.degree()) throw PreconditionError("too many coefficients for an element of " + j.dump());
      std::vector<uint64_t> c;
      for (auto& x : j) c.push_back(k.base().from_rational(to_rational(x)));
      c.resize(k.degree(), 0);
      return k.from_coeffs(c);
    }
  }
  return k.from_rational(to_rational(j));
}

template <class K>
json elem_to_json(const K& k, const typename K::Elem& a) {
  if constexpr (std::is_same_v<K, ExtField>) {
    if (k.degree() > 1) {
      json arr = json::array();
      for (auto c : a) arr.push_back(c);
      return arr;
    }
    return std::to_string(a[0]);
  } else {
    return k.str(a);
  }
}

template <class K>
Form<K> form_from_json(const K& k, const json& j) {
  const auto& cs = j.at("coeffs");
  Form<K> f;
  for (auto& c : cs) f.a.push_back(elem_from_json(k, c));
  if (j.contains("degree") && j.at("degree").get<int>() != f.degree())
    throw PreconditionError("degree does not match the number of coefficients");
  if (f.a.empty()) throw PreconditionError("empty coefficient list");
  return f;
}

template <class K>
json form_to_json(const K& k, const Form<K>& f) {
  json cs = json::array();
  for (auto& a : f.a) cs.push_back(elem_to_json(k, a));
  return json{{"field", field_to_json(k.desc())}, {"degree", f.degree()}, {"coeffs", cs}};
}

template <class K>
Moebius<K> matrix_from_json(const K& k, const json& j) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
    throw PreconditionError("a matrix is [[m11, m12], [m21, m22]]");
  return Moebius<K>{elem_from_json(k, j[0][0]), elem_from_json(k, j[0][1]), elem_from_json(k, j[1][0]),
                    elem_from_json(k, j[1][1])};
}

template <class K>
json matrix_to_json(const K& k, const Moebius<K>& m) {
  return json::array({json::array({elem_to_json(k, m.m11), elem_to_json(k, m.m12)}),
                      json::array({elem_to_json(k, m.m21), elem_to_json(k, m.m22)})});
}

template <class K>
json isom_to_json(const K& k, const IsomResult<K>& r) {
  json ms = json::array(), ss = json::array();
  for (auto& m : r.matrices) ms.push_back(matrix_to_json(k, m));
  for (auto& s : r.scalars) ss.push_back(elem_to_json(k, s));
  return json{{"count", r.size()}, {"matrices", ms}, {"scalars", ss}, {"method", r.method}, {"fallback", r.fallback}};
}

RecipePtr recipe_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "f") throw PreconditionError("unknown recipe leaf " + j.dump());
    return Recipe::leaf();
  }
  const auto op = j.at("op").get<std::string>();
  std::vector<RecipePtr> args;
  for (auto& a : j.at("args")) args.push_back(recipe_from_json(a));
  if (op == "tv") {
    if (args.size() != 2) throw PreconditionError("tv takes two arguments");
    return Recipe::tv(args[0], args[1], j.at("h").get<int>());
  }
  if (op == "mul") return Recipe::mul(std::move(args));
  throw PreconditionError("unknown recipe op " + op);
}

json recipe_to_json(const RecipePtr& r) {
  if (r->op == Recipe::Op::Leaf) return "f";
  json args = json::array();
  for (auto& a : r->args) args.push_back(recipe_to_json(a));
  if (r->op == Recipe::Op::Tv) return json{{"op", "tv"}, {"h", r->h}, {"args", args}};
  return json{{"op", "mul"}, {"args", args}};
}

#define HYPERISO_IO(K)                                                        \
  template K::Elem elem_from_json<K>(const K&, const json&);                  \
  template json elem_to_json<K>(const K&, const K::Elem&);                    \
  template Form<K> form_from_json<K>(const K&, const json&);                  \
  template json form_to_json<K>(const K&, const Form<K>&);                    \
  template Moebius<K> matrix_from_json<K>(const K&, const json&);             \
  template json matrix_to_json<K>(const K&, const Moebius<K>&);               \
  template json isom_to_json<K>(const K&, const IsomResult<K>&);

HYPERISO_IO(RationalField)
HYPERISO_IO(PrimeField)
HYPERISO_IO(ExtField)

}  // namespace hyperiso
