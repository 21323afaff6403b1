#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace hyperiso::nt {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);
// inverse of a modulo m, 0 if not invertible
uint64_t invmod(uint64_t a, uint64_t m);

bool is_prime(const mpz_class& n);
bool is_prime(uint64_t n);

// prime factorization with multiplicities, ascending primes
std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n);

mpz_class ipow(const mpz_class& b, unsigned long e);

// u*a + v*b = g = gcd(a, b) >= 0
long long ext_gcd(long long a, long long b, long long& u, long long& v);

}  // namespace hyperiso::nt
