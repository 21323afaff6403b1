#pragma once

#include <gmpxx.h>

#include <random>
#include <string>

#include "hyperiso/errors.hpp"
#include "hyperiso/field/field_desc.hpp"

namespace hyperiso {

using Rng = std::mt19937_64;

class RationalField {
 public:
  using Elem = mpq_class;
  static constexpr bool finite = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_mpz(const mpz_class& v) const { return Elem(v); }
  Elem from_rational(const mpq_class& v) const { return v; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw PreconditionError("inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  mpz_class characteristic() const { return 0; }
  unsigned degree() const { return 1; }

  // small integers in [-bound, bound]
  Elem random(Rng& rng, long bound = 100) const {
    return Elem(static_cast<long>(rng() % (2 * bound + 1)) - bound);
  }
  std::string str(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const {
    Elem v(s);
    v.canonicalize();
    return v;
  }

  FieldDesc desc() const { return FieldDesc{}; }
  bool operator==(const RationalField&) const { return true; }
};

}  // namespace hyperiso
