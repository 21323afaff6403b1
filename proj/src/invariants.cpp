#include "hyperiso/invariants.hpp"

#include <cstdlib>
#include <numeric>

#include "hyperiso/errors.hpp"

namespace hyperiso {

namespace {

// all integer vectors on `slots` with sum |c_i| = s, in lexicographically decreasing order
void enumerate(size_t pos, long left, std::vector<long>& cur, const std::vector<size_t>& slots,
               const std::vector<int>& deg, long target, std::vector<long>& best, bool& found) {
  if (found) return;
  if (pos == slots.size()) {
    if (left != 0) return;
    long s = 0;
    for (size_t i = 0; i < slots.size(); ++i) s += cur[slots[i]] * deg[slots[i]];
    if (s == target) best = cur, found = true;
    return;
  }
  for (long v = left; v >= -left; --v) {
    if (pos + 1 == slots.size() && std::labs(v) != left) continue;
    cur[slots[pos]] = v;
    enumerate(pos + 1, left - std::labs(v), cur, slots, deg, target, best, found);
    if (found) return;
  }
  cur[slots[pos]] = 0;
}

}  // namespace

std::vector<long> normalizing_exponents(const std::vector<int>& degrees, const std::vector<bool>& nonzero) {
  std::vector<size_t> slots;
  long d = 0;
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (!nonzero[i]) continue;
    if (degrees[i] <= 0) throw PreconditionError("invariant degrees must be positive");
    slots.push_back(i);
    d = std::gcd(d, static_cast<long>(degrees[i]));
  }
  if (slots.empty()) throw PreconditionError("canonical_representative: all invariants vanish");
  std::vector<long> cur(degrees.size(), 0), best;
  for (long s = 1;; ++s) {
    bool found = false;
    enumerate(0, s, cur, slots, degrees, d, best, found);
    if (found) return best;
  }
}

template <class K>
std::vector<typename K::Elem> canonical_representative(const K& k, const std::vector<typename K::Elem>& values,
                                                       const std::vector<int>& degrees) {
  if (values.size() != degrees.size()) throw PreconditionError("canonical_representative: length mismatch");
  std::vector<bool> nz(values.size());
  for (size_t i = 0; i < values.size(); ++i) nz[i] = !k.is_zero(values[i]);
  auto c = normalizing_exponents(degrees, nz);
  long d = 0;
  for (size_t i = 0; i < values.size(); ++i)
    if (nz[i]) d = std::gcd(d, static_cast<long>(degrees[i]));
  auto I = k.one();
  for (size_t i = 0; i < values.size(); ++i)
    if (c[i]) I = k.mul(I, power(k, values[i], static_cast<long long>(c[i])));
  std::vector<typename K::Elem> out;
  for (size_t i = 0; i < values.size(); ++i)
    out.push_back(nz[i] ? k.div(values[i], power(k, I, static_cast<long long>(degrees[i] / d))) : k.zero());
  return out;
}

template std::vector<mpq_class> canonical_representative<RationalField>(const RationalField&,
                                                                        const std::vector<mpq_class>&,
                                                                        const std::vector<int>&);
template std::vector<uint64_t> canonical_representative<PrimeField>(const PrimeField&, const std::vector<uint64_t>&,
                                                                    const std::vector<int>&);
template std::vector<ExtField::Elem> canonical_representative<ExtField>(const ExtField&,
                                                                        const std::vector<ExtField::Elem>&,
                                                                        const std::vector<int>&);

}  // namespace hyperiso
