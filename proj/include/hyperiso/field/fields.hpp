#pragma once

#include <concepts>
#include <variant>

#include "hyperiso/field/ext_field.hpp"
#include "hyperiso/field/prime_field.hpp"
#include "hyperiso/field/rational.hpp"

namespace hyperiso {

template <class K>
concept FieldLike = requires(const K& k, const typename K::Elem& a) {
  { k.add(a, a) } -> std::convertible_to<typename K::Elem>;
  { k.mul(a, a) } -> std::convertible_to<typename K::Elem>;
  { k.inv(a) } -> std::convertible_to<typename K::Elem>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.desc() } -> std::convertible_to<FieldDesc>;
};

template <class K>
inline constexpr bool is_finite_v = K::finite;

template <class K>
typename K::Elem power(const K& k, typename K::Elem a, mpz_class e) {
  if (e < 0) {
    a = k.inv(a);
    e = -e;
  }
  typename K::Elem r = k.one();
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = k.mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = k.mul(r, a);
  }
  return r;
}

template <class K>
typename K::Elem power(const K& k, const typename K::Elem& a, long long e) {
  return power(k, a, mpz_class(std::to_string(e)));
}

using AnyField = std::variant<RationalField, PrimeField, ExtField>;

AnyField make_field(const FieldDesc& d);

}  // namespace hyperiso
