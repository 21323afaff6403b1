#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hyperiso/field/prime_field.hpp"

namespace hyperiso {

// F_p[t]/(m(t)) for monic irreducible m of degree r >= 1. Elements are
// coefficient vectors of length exactly r.
class ExtField {
 public:
  using Elem = std::vector<uint64_t>;
  static constexpr bool finite = true;

  // modulus c0..cr, monic; irreducibility is checked
  ExtField(uint64_t p, std::vector<uint64_t> modulus);

  const PrimeField& base() const { return fp_; }
  uint64_t p() const { return fp_.p(); }
  const std::vector<uint64_t>& modulus() const { return mod_; }

  Elem zero() const { return Elem(r_, 0); }
  Elem one() const {
    Elem e(r_, 0);
    e[0] = 1;
    return e;
  }
  Elem gen() const;
  Elem from_base(uint64_t a) const {
    Elem e(r_, 0);
    e[0] = a;
    return e;
  }
  Elem from_int(long long v) const { return from_base(fp_.from_int(v)); }
  Elem from_mpz(const mpz_class& v) const { return from_base(fp_.from_mpz(v)); }
  Elem from_rational(const mpq_class& v) const { return from_base(fp_.from_rational(v)); }
  Elem from_coeffs(std::vector<uint64_t> c) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const { return a == one(); }
  // true when a lies in the prime field
  bool in_base(const Elem& a) const;

  mpz_class characteristic() const { return fp_.characteristic(); }
  unsigned degree() const { return r_; }
  mpz_class size() const;
  // a^(p^s)
  Elem frobenius(const Elem& a, unsigned s) const;

  Elem random(Rng& rng) const;
  std::string str(const Elem& a) const;
  Elem parse(const std::string& s) const { return from_rational(mpq_class(s)); }

  FieldDesc desc() const;
  bool operator==(const ExtField& o) const { return fp_ == o.fp_ && mod_ == o.mod_; }

 private:
  PrimeField fp_;
  unsigned r_;
  std::vector<uint64_t> mod_;
  std::vector<std::vector<uint64_t>> frob_;  // frob_[j] = t^{j p} mod m
};

}  // namespace hyperiso
