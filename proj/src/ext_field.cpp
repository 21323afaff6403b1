#include "hyperiso/field/ext_field.hpp"

#include "hyperiso/roots.hpp"
#include "hyperiso/poly.hpp"

namespace hyperiso {

ExtField::ExtField(uint64_t p, std::vector<uint64_t> modulus) : fp_(p), mod_(std::move(modulus)) {
  PolyRing<PrimeField> R(fp_);
  for (auto& c : mod_) c %= p;
  R.trim(mod_);
  if (mod_.size() < 2 || mod_.back() != 1) throw PreconditionError("extension modulus must be monic of degree >= 1");
  r_ = static_cast<unsigned>(mod_.size() - 1);
  if (!is_irreducible(R, mod_)) throw PreconditionError("extension modulus is reducible over F_" + std::to_string(p));
  // frob_[j] = t^{jp} mod m
  std::vector<uint64_t> tp = R.powmod(R.x(), characteristic(), mod_);
  std::vector<uint64_t> cur{1};
  frob_.resize(r_);
  for (unsigned j = 0; j < r_; ++j) {
    frob_[j] = cur;
    frob_[j].resize(r_, 0);
    cur = R.mulmod(cur, tp, mod_);
  }
}

ExtField::Elem ExtField::gen() const {
  if (r_ == 1) return from_base(fp_.neg(mod_[0]));
  Elem e(r_, 0);
  e[1] = 1;
  return e;
}

ExtField::Elem ExtField::from_coeffs(std::vector<uint64_t> c) const {
  for (auto& x : c) x %= fp_.p();
  if (c.size() > r_) {
    // reduce by the monic modulus from the top
    for (size_t i = c.size(); i-- > r_;) {
      uint64_t top = c[i];
      if (top == 0) continue;
      for (unsigned j = 0; j < r_; ++j) c[i - r_ + j] = fp_.sub(c[i - r_ + j], fp_.mul(top, mod_[j]));
      c[i] = 0;
    }
  }
  c.resize(r_, 0);
  return c;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r(r_);
  for (unsigned i = 0; i < r_; ++i) r[i] = fp_.add(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem r(r_);
  for (unsigned i = 0; i < r_; ++i) r[i] = fp_.sub(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
  Elem r(r_);
  for (unsigned i = 0; i < r_; ++i) r[i] = fp_.neg(a[i]);
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  if (r_ == 1) return Elem{fp_.mul(a[0], b[0])};
  std::vector<uint64_t> c(2 * r_ - 1, 0);
  const uint64_t p = fp_.p();
  if (p < (uint64_t{1} << 31) && r_ <= 16) {
    // accumulate in 128 bits, reduce once
    std::vector<unsigned __int128> acc(2 * r_ - 1, 0);
    for (unsigned i = 0; i < r_; ++i) {
      if (!a[i]) continue;
      for (unsigned j = 0; j < r_; ++j) acc[i + j] += static_cast<uint64_t>(a[i] * b[j]);
    }
    for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<uint64_t>(acc[i] % p);
  } else {
    for (unsigned i = 0; i < r_; ++i)
      for (unsigned j = 0; j < r_; ++j) c[i + j] = fp_.add(c[i + j], fp_.mul(a[i], b[j]));
  }
  return from_coeffs(std::move(c));
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw PreconditionError("inverse of zero");
  PolyRing<PrimeField> R(fp_);
  std::vector<uint64_t> pa = trimmed(fp_, a), s, t;
  std::vector<uint64_t> g = R.xgcd(pa, mod_, s, t);
  s.resize(r_, 0);
  return s;
}

bool ExtField::is_zero(const Elem& a) const {
  for (auto x : a)
    if (x) return false;
  return true;
}

bool ExtField::in_base(const Elem& a) const {
  for (unsigned i = 1; i < r_; ++i)
    if (a[i]) return false;
  return true;
}

mpz_class ExtField::size() const { return nt::ipow(characteristic(), r_); }

ExtField::Elem ExtField::frobenius(const Elem& a, unsigned s) const {
  s %= r_;
  Elem cur = a;
  for (unsigned k = 0; k < s; ++k) {
    Elem nxt(r_, 0);
    for (unsigned j = 0; j < r_; ++j) {
      if (!cur[j]) continue;
      for (unsigned i = 0; i < r_; ++i) nxt[i] = fp_.add(nxt[i], fp_.mul(cur[j], frob_[j][i]));
    }
    cur = std::move(nxt);
  }
  return cur;
}

ExtField::Elem ExtField::random(Rng& rng) const {
  Elem e(r_);
  for (auto& x : e) x = rng() % fp_.p();
  return e;
}

std::string ExtField::str(const Elem& a) const {
  if (in_base(a)) return std::to_string(a[0]);
  std::string s = "[";
  for (unsigned i = 0; i < r_; ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + "]";
}

FieldDesc ExtField::desc() const {
  FieldDesc d;
  d.characteristic = characteristic();
  d.degree = r_;
  if (r_ > 1)
    for (auto c : mod_) d.modulus.emplace_back(static_cast<unsigned long>(c));
  return d;
}

AnyField make_field(const FieldDesc& d) {
  if (d.characteristic == 0) {
    if (d.degree != 1) throw CapabilityError("number fields are not supported");
    return RationalField{};
  }
  if (!d.characteristic.fits_ulong_p()) throw CapabilityError("characteristic too large");
  uint64_t p = d.characteristic.get_ui();
  if (d.degree == 1) return PrimeField(p);
  if (d.modulus.size() != d.degree + 1) throw PreconditionError("modulus length does not match extension degree");
  std::vector<uint64_t> m;
  for (const auto& c : d.modulus) {
    mpz_class r = c % d.characteristic;
    if (r < 0) r += d.characteristic;
    m.push_back(r.get_ui());
  }
  return ExtField(p, std::move(m));
}

}  // namespace hyperiso
