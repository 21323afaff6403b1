#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hyperiso/errors.hpp"
#include "hyperiso/field/field_desc.hpp"
#include "hyperiso/field/rational.hpp"
#include "hyperiso/number_theory.hpp"

namespace hyperiso {

// Z/pZ for a prime p < 2^63; elements are residues in [0, p).
class PrimeField {
 public:
  using Elem = uint64_t;
  static constexpr bool finite = true;

  explicit PrimeField(uint64_t p);

  uint64_t p() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return r < 0 ? static_cast<Elem>(r + static_cast<long long>(p_)) : static_cast<Elem>(r);
  }
  Elem from_mpz(const mpz_class& v) const;
  Elem from_rational(const mpq_class& v) const;

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return (s >= p_ || s < a) ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return small_ ? (a * b) % p_ : nt::mulmod(a, b, p_); }
  Elem inv(Elem a) const {
    if (a == 0) throw PreconditionError("inverse of zero");
    return nt::invmod(a, p_);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, uint64_t e) const { return nt::powmod(a, e, p_); }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }

  mpz_class characteristic() const;
  unsigned degree() const { return 1; }
  mpz_class size() const { return characteristic(); }
  Elem frobenius(Elem a, unsigned) const { return a; }

  Elem random(Rng& rng) const { return rng() % p_; }
  std::string str(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const { return from_rational(mpq_class(s)); }
  // representative in (-p/2, p/2]
  long long signed_value(Elem a) const {
    return a > p_ / 2 ? -static_cast<long long>(p_ - a) : static_cast<long long>(a);
  }

  FieldDesc desc() const;
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint64_t p_;
  bool small_;
};

}  // namespace hyperiso
