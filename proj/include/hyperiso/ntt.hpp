#pragma once

#include <cstdint>
#include <vector>

namespace hyperiso::ntt {

// Moduli below this bound are handled by three-prime NTT with CRT.
constexpr uint64_t kMaxModulus = uint64_t{1} << 31;

// a * b mod p, entries already reduced, p < kMaxModulus
std::vector<uint64_t> multiply(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b, uint64_t p);

// cyclic convolution modulo one NTT prime; exposed for tests
std::vector<uint32_t> convolve_single(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b, int prime_index);
uint32_t prime(int prime_index);

}  // namespace hyperiso::ntt
