#include "hyperiso/ntt.hpp"

#include <algorithm>

#include "hyperiso/kernels.hpp"
#include "hyperiso/number_theory.hpp"

namespace hyperiso::ntt {
namespace {

constexpr uint32_t kPrimes[3] = {998244353u, 167772161u, 469762049u};
constexpr uint32_t kGenerator = 3;

void build_roots(uint32_t q, size_t n, bool inverse, const kernels::Montgomery32& m, std::vector<uint32_t>& out) {
  out.assign(std::max<size_t>(n, 2), 0);
  for (size_t len = 1; len < n; len <<= 1) {
    uint64_t w = nt::powmod(kGenerator, (q - 1) / (2 * len), q);
    if (inverse) w = nt::invmod(w, q);
    uint64_t cur = 1;
    for (size_t j = 0; j < len; ++j) {
      out[len + j] = m.to_mont(static_cast<uint32_t>(cur));
      cur = cur * w % q;
    }
  }
}

std::vector<uint32_t> convolve(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b, uint32_t q) {
  const size_t need = a.size() + b.size() - 1;
  size_t n = 1;
  while (n < need) n <<= 1;
  const kernels::Montgomery32 m(q);
  const kernels::Table& kt = kernels::active();
  std::vector<uint32_t> roots, iroots;
  build_roots(q, n, false, m, roots);
  build_roots(q, n, true, m, iroots);
  std::vector<uint32_t> fa(n, 0), fb(n, 0);
  for (size_t i = 0; i < a.size(); ++i) fa[i] = a[i] % q;
  for (size_t i = 0; i < b.size(); ++i) fb[i] = b[i] % q;
  kt.ntt_dif(fa.data(), n, roots.data(), m);
  if (&a == &b) {
    fb = fa;
  } else {
    kt.ntt_dif(fb.data(), n, roots.data(), m);
  }
  kt.mont_mul_vec(fa.data(), fb.data(), n, m);
  kt.ntt_dit(fa.data(), n, iroots.data(), m);
  // undo the R^{-1} from the pointwise product and the factor n
  uint64_t ninv = nt::invmod(n % q, q);
  uint32_t scale = static_cast<uint32_t>(static_cast<uint64_t>(m.r_mod) * m.r_mod % q * ninv % q);
  std::vector<uint32_t> sv(n, scale);
  kt.mont_mul_vec(fa.data(), sv.data(), n, m);
  fa.resize(need);
  return fa;
}

}  // namespace

uint32_t prime(int i) { return kPrimes[i]; }

std::vector<uint32_t> convolve_single(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b, int i) {
  if (a.empty() || b.empty()) return {};
  return convolve(a, b, kPrimes[i]);
}

std::vector<uint64_t> multiply(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> a32(a.begin(), a.end()), b32(b.begin(), b.end());
  const bool square = (&a == &b);
  std::vector<uint32_t> r[3];
  for (int i = 0; i < 3; ++i) r[i] = square ? convolve(a32, a32, kPrimes[i]) : convolve(a32, b32, kPrimes[i]);
  const uint64_t q1 = kPrimes[0], q2 = kPrimes[1], q3 = kPrimes[2];
  const uint64_t q1_inv_q2 = nt::invmod(q1 % q2, q2);
  const uint64_t q12_inv_q3 = nt::invmod(q1 * q2 % q3, q3);
  const uint64_t q1_p = q1 % p, q12_p = nt::mulmod(q1, q2, p);
  std::vector<uint64_t> out(r[0].size());
  for (size_t i = 0; i < out.size(); ++i) {
    uint64_t x1 = r[0][i], x2 = r[1][i], x3 = r[2][i];
    uint64_t v2 = (x2 + q2 - x1 % q2) % q2 * q1_inv_q2 % q2;
    uint64_t t = (x1 + q1 * v2) % q3;  // q1*v2 < 2^60
    uint64_t v3 = (x3 + q3 - t) % q3 * q12_inv_q3 % q3;
    out[i] = (x1 % p + q1_p * v2 % p + q12_p * v3 % p) % p;
  }
  return out;
}

}  // namespace hyperiso::ntt
