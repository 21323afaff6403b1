#pragma once

#include <cstddef>
#include <cstdint>

// Hot loops over Z/pZ with word-size p. Each kernel has a portable scalar
// version and an AVX2 version; the active table is picked once at startup.
namespace hyperiso::kernels {

struct Montgomery32 {
  uint32_t mod;      // odd, < 2^30
  uint32_t neg_inv;  // -mod^{-1} mod 2^32
  uint32_t r_mod;    // 2^32 mod mod
  uint32_t r2_mod;   // 2^64 mod mod

  explicit Montgomery32(uint32_t q);
  uint32_t to_mont(uint32_t a) const;
  uint32_t from_mont(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
};

struct Table {
  const char* name;
  // y[i] = (y[i] + a * x[i]) mod p, entries < p < 2^31, ap = floor(a * 2^32 / p)
  void (*axpy_mod)(uint64_t* y, const uint64_t* x, size_t n, uint64_t a, uint64_t ap, uint64_t p);
  // a[i] = mont(a[i] * b[i])
  void (*mont_mul_vec)(uint32_t* a, const uint32_t* b, size_t n, const Montgomery32& m);
  // decimation-in-frequency forward transform, output in bit-reversed order.
  // roots[len + j] = w_{2 len}^j in Montgomery form.
  void (*ntt_dif)(uint32_t* a, size_t n, const uint32_t* roots, const Montgomery32& m);
  // decimation-in-time inverse on bit-reversed input, unscaled.
  void (*ntt_dit)(uint32_t* a, size_t n, const uint32_t* iroots, const Montgomery32& m);
};

const Table& scalar_table();
const Table* avx2_table();  // nullptr when not compiled in

const Table& active();
bool avx2_supported();
// Force a backend ("scalar" or "avx2"); returns false if unavailable.
bool select(const char* name);

inline uint64_t shoup_precompute(uint64_t a, uint64_t p) { return (a << 32) / p; }

}  // namespace hyperiso::kernels
