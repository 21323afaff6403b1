#include "hyperiso/number_theory.hpp"

#include <algorithm>
#include <random>

namespace hyperiso::nt {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) return 0;
  if (t < 0) t += m;
  return static_cast<uint64_t>(t);
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime(uint64_t n) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return is_prime(z);
}

mpz_class ipow(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

long long ext_gcd(long long a, long long b, long long& u, long long& v) {
  long long u0 = 1, v0 = 0, u1 = 0, v1 = 1;
  while (b != 0) {
    long long q = a / b;
    std::swap(a, b);
    b -= q * a;
    u0 -= q * u1;
    std::swap(u0, u1);
    v0 -= q * v1;
    std::swap(v0, v1);
  }
  if (a < 0) {
    a = -a;
    u0 = -u0;
    v0 = -v0;
  }
  u = u0;
  v = v0;
  return a;
}

namespace {

mpz_class rho(const mpz_class& n, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (;;) {
    mpz_class y = mpz_class(static_cast<unsigned long>(rng() % 1000003)) % n;
    mpz_class c = mpz_class(static_cast<unsigned long>(rng() % 1000003 + 1)) % n;
    mpz_class g = 1, q = 1, x, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(const mpz_class& n, std::vector<mpz_class>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  mpz_class d = rho(n, rng);
  factor_rec(d, out, rng);
  factor_rec(n / d, out, rng);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n0) {
  std::vector<mpz_class> ps;
  mpz_class n = abs(n0);
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    if (p * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ps.emplace_back(p);
      n /= p;
    }
  }
  std::mt19937_64 rng(0x5eed);
  factor_rec(n, ps, rng);
  std::sort(ps.begin(), ps.end());
  std::vector<std::pair<mpz_class, unsigned>> res;
  for (auto& p : ps) {
    if (!res.empty() && res.back().first == p)
      ++res.back().second;
    else
      res.emplace_back(p, 1);
  }
  return res;
}

}  // namespace hyperiso::nt
