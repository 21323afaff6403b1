#include <immintrin.h>

#include "hyperiso/kernels.hpp"

namespace hyperiso::kernels {
namespace {

// Eight lanes of Montgomery multiplication, inputs < 2q, output < q.
inline __m256i mont_mul8(__m256i a, __m256i b, __m256i q, __m256i ninv) {
  __m256i pe = _mm256_mul_epu32(a, b);
  __m256i po = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  __m256i me = _mm256_mul_epu32(pe, ninv);
  __m256i mo = _mm256_mul_epu32(po, ninv);
  __m256i re = _mm256_srli_epi64(_mm256_add_epi64(pe, _mm256_mul_epu32(me, q)), 32);
  __m256i ro = _mm256_add_epi64(po, _mm256_mul_epu32(mo, q));
  __m256i r = _mm256_blend_epi32(re, ro, 0xAA);
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, q));
}

inline __m256i reduce_once(__m256i x, __m256i q) { return _mm256_min_epu32(x, _mm256_sub_epi32(x, q)); }

void axpy_mod_avx2(uint64_t* y, const uint64_t* x, size_t n, uint64_t a, uint64_t ap, uint64_t p) {
  const __m256i va = _mm256_set1_epi64x(static_cast<long long>(a));
  const __m256i vap = _mm256_set1_epi64x(static_cast<long long>(ap));
  const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
  const __m256i vpm1 = _mm256_set1_epi64x(static_cast<long long>(p - 1));
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(vap, vx), 32);
    __m256i t = _mm256_sub_epi64(_mm256_mul_epu32(va, vx), _mm256_mul_epu32(q, vp));
    t = _mm256_sub_epi64(t, _mm256_and_si256(_mm256_cmpgt_epi64(t, vpm1), vp));
    t = _mm256_add_epi64(t, vy);
    t = _mm256_sub_epi64(t, _mm256_and_si256(_mm256_cmpgt_epi64(t, vpm1), vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), t);
  }
  if (i < n) scalar_table().axpy_mod(y + i, x + i, n - i, a, ap, p);
}

void mont_mul_vec_avx2(uint32_t* a, const uint32_t* b, size_t n, const Montgomery32& m) {
  const __m256i q = _mm256_set1_epi32(static_cast<int>(m.mod));
  const __m256i ninv = _mm256_set1_epi32(static_cast<int>(m.neg_inv));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), mont_mul8(va, vb, q, ninv));
  }
  for (; i < n; ++i) a[i] = m.mul(a[i], b[i]);
}

void ntt_dif_avx2(uint32_t* a, size_t n, const uint32_t* roots, const Montgomery32& m) {
  const uint32_t qs = m.mod;
  const __m256i q = _mm256_set1_epi32(static_cast<int>(qs));
  const __m256i ninv = _mm256_set1_epi32(static_cast<int>(m.neg_inv));
  size_t len = n >> 1;
  for (; len >= 8; len >>= 1) {
    const uint32_t* w = roots + len;
    for (size_t s = 0; s < n; s += 2 * len) {
      for (size_t j = 0; j < len; j += 8) {
        __m256i u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + s + j));
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + s + j + len));
        __m256i vw = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + j));
        __m256i x = reduce_once(_mm256_add_epi32(u, v), q);
        __m256i d = _mm256_sub_epi32(_mm256_add_epi32(u, q), v);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + s + j), x);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + s + j + len), mont_mul8(d, vw, q, ninv));
      }
    }
  }
  for (; len >= 1; len >>= 1) {
    const uint32_t* w = roots + len;
    for (size_t s = 0; s < n; s += 2 * len) {
      for (size_t j = 0; j < len; ++j) {
        uint32_t u = a[s + j], v = a[s + j + len];
        uint32_t x = u + v;
        a[s + j] = x >= qs ? x - qs : x;
        a[s + j + len] = m.mul(u + qs - v, w[j]);
      }
    }
  }
}

void ntt_dit_avx2(uint32_t* a, size_t n, const uint32_t* iroots, const Montgomery32& m) {
  const uint32_t qs = m.mod;
  const __m256i q = _mm256_set1_epi32(static_cast<int>(qs));
  const __m256i ninv = _mm256_set1_epi32(static_cast<int>(m.neg_inv));
  size_t len = 1;
  for (; len < n && len < 8; len <<= 1) {
    const uint32_t* w = iroots + len;
    for (size_t s = 0; s < n; s += 2 * len) {
      for (size_t j = 0; j < len; ++j) {
        uint32_t u = a[s + j], v = m.mul(a[s + j + len], w[j]);
        uint32_t x = u + v;
        a[s + j] = x >= qs ? x - qs : x;
        a[s + j + len] = u >= v ? u - v : u + qs - v;
      }
    }
  }
  for (; len < n; len <<= 1) {
    const uint32_t* w = iroots + len;
    for (size_t s = 0; s < n; s += 2 * len) {
      for (size_t j = 0; j < len; j += 8) {
        __m256i u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + s + j));
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + s + j + len));
        __m256i vw = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + j));
        v = mont_mul8(v, vw, q, ninv);
        __m256i x = reduce_once(_mm256_add_epi32(u, v), q);
        __m256i d = reduce_once(_mm256_sub_epi32(_mm256_add_epi32(u, q), v), q);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + s + j), x);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + s + j + len), d);
      }
    }
  }
}

const Table kAvx2{"avx2", axpy_mod_avx2, mont_mul_vec_avx2, ntt_dif_avx2, ntt_dit_avx2};

}  // namespace

const Table* avx2_table() { return &kAvx2; }

}  // namespace hyperiso::kernels
