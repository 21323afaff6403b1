#include "hyperiso/field/prime_field.hpp"

namespace hyperiso {

PrimeField::PrimeField(uint64_t p) : p_(p), small_(p < (uint64_t{1} << 32)) {
  if (p >= (uint64_t{1} << 63) || !nt::is_prime(p))
    throw PreconditionError("characteristic must be a prime below 2^63, got " + std::to_string(p));
}

PrimeField::Elem PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r = v % characteristic();
  if (r < 0) r += characteristic();
  return static_cast<Elem>(mpz_get_ui(r.get_mpz_t()));
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& v) const {
  Elem d = from_mpz(v.get_den());
  if (d == 0) throw CharacteristicObstruction("denominator " + v.get_den().get_str() + " vanishes mod " + std::to_string(p_));
  return mul(from_mpz(v.get_num()), inv(d));
}

mpz_class PrimeField::characteristic() const { return mpz_class(static_cast<unsigned long>(p_)); }

FieldDesc PrimeField::desc() const {
  FieldDesc d;
  d.characteristic = characteristic();
  return d;
}

std::string FieldDesc::str() const {
  if (characteristic == 0) return "QQ";
  if (degree == 1) return "GF(" + characteristic.get_str() + ")";
  return "GF(" + characteristic.get_str() + "^" + std::to_string(degree) + ")";
}

}  // namespace hyperiso
