#include "hyperiso/kernels.hpp"

namespace hyperiso::kernels {

Montgomery32::Montgomery32(uint32_t q) : mod(q) {
  uint32_t inv = q;  // Newton: inv = q^{-1} mod 2^32
  for (int i = 0; i < 5; ++i) inv *= 2 - q * inv;
  neg_inv = 0u - inv;
  r_mod = static_cast<uint32_t>((uint64_t{1} << 32) % q);
  r2_mod = static_cast<uint32_t>(static_cast<uint64_t>(r_mod) * r_mod % q);
}

uint32_t Montgomery32::mul(uint32_t a, uint32_t b) const {
  uint64_t t = static_cast<uint64_t>(a) * b;
  uint32_t m = static_cast<uint32_t>(t) * neg_inv;
  uint32_t r = static_cast<uint32_t>((t + static_cast<uint64_t>(m) * mod) >> 32);
  return r >= mod ? r - mod : r;
}

uint32_t Montgomery32::to_mont(uint32_t a) const { return mul(a, r2_mod); }
uint32_t Montgomery32::from_mont(uint32_t a) const { return mul(a, 1); }

namespace {

void axpy_mod_scalar(uint64_t* y, const uint64_t* x, size_t n, uint64_t a, uint64_t ap, uint64_t p) {
  for (size_t i = 0; i < n; ++i) {
    uint64_t q = (ap * x[i]) >> 32;
    uint64_t t = a * x[i] - q * p;
    if (t >= p) t -= p;
    t += y[i];
    y[i] = t >= p ? t - p : t;
  }
}

void mont_mul_vec_scalar(uint32_t* a, const uint32_t* b, size_t n, const Montgomery32& m) {
  for (size_t i = 0; i < n; ++i) a[i] = m.mul(a[i], b[i]);
}

void ntt_dif_scalar(uint32_t* a, size_t n, const uint32_t* roots, const Montgomery32& m) {
  const uint32_t q = m.mod;
  for (size_t len = n >> 1; len >= 1; len >>= 1) {
    const uint32_t* w = roots + len;
    for (size_t s = 0; s < n; s += 2 * len) {
      for (size_t j = 0; j < len; ++j) {
        uint32_t u = a[s + j], v = a[s + j + len];
        uint32_t x = u + v;
        a[s + j] = x >= q ? x - q : x;
        a[s + j + len] = m.mul(u + q - v, w[j]);
      }
    }
  }
}

void ntt_dit_scalar(uint32_t* a, size_t n, const uint32_t* iroots, const Montgomery32& m) {
  const uint32_t q = m.mod;
  for (size_t len = 1; len < n; len <<= 1) {
    const uint32_t* w = iroots + len;
    for (size_t s = 0; s < n; s += 2 * len) {
      for (size_t j = 0; j < len; ++j) {
        uint32_t u = a[s + j], v = m.mul(a[s + j + len], w[j]);
        uint32_t x = u + v;
        a[s + j] = x >= q ? x - q : x;
        a[s + j + len] = u >= v ? u - v : u + q - v;
      }
    }
  }
}

const Table kScalar{"scalar", axpy_mod_scalar, mont_mul_vec_scalar, ntt_dif_scalar, ntt_dit_scalar};

}  // namespace

const Table& scalar_table() { return kScalar; }

}  // namespace hyperiso::kernels
