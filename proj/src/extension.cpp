#include "hyperiso/extension.hpp"

namespace hyperiso {

namespace {

// Solve sum_i c_i basis[i] = target over F_p; basis vectors have length R.
std::optional<std::vector<uint64_t>> solve_span(const PrimeField& fp, const std::vector<std::vector<uint64_t>>& basis,
                                                const std::vector<uint64_t>& target) {
  const size_t r = basis.size(), R = target.size();
  // augmented R x (r + 1) system
  std::vector<std::vector<uint64_t>> A(R, std::vector<uint64_t>(r + 1));
  for (size_t i = 0; i < R; ++i) {
    for (size_t j = 0; j < r; ++j) A[i][j] = basis[j][i];
    A[i][r] = target[i];
  }
  std::vector<long> pivot_col_row(r, -1);
  size_t row = 0;
  for (size_t c = 0; c < r && row < R; ++c) {
    size_t piv = row;
    while (piv < R && A[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(A[piv], A[row]);
    uint64_t inv = fp.inv(A[row][c]);
    for (auto& x : A[row]) x = fp.mul(x, inv);
    for (size_t i = 0; i < R; ++i) {
      if (i == row || A[i][c] == 0) continue;
      uint64_t f = A[i][c];
      for (size_t j = 0; j <= r; ++j) A[i][j] = fp.sub(A[i][j], fp.mul(f, A[row][j]));
    }
    pivot_col_row[c] = static_cast<long>(row);
    ++row;
  }
  for (size_t i = row; i < R; ++i)
    if (A[i][r] != 0) return std::nullopt;
  std::vector<uint64_t> c(r, 0);
  for (size_t j = 0; j < r; ++j)
    if (pivot_col_row[j] >= 0) c[j] = A[pivot_col_row[j]][r];
  return c;
}

}  // namespace

template <class K>
ExtField::Elem Embedding<K>::map(const typename K::Elem& a) const {
  if constexpr (std::is_same_v<K, PrimeField>) {
    return dst.from_base(a);
  } else {
    ExtField::Elem r = dst.zero(), pw = dst.one();
    for (unsigned i = 0; i < src.degree(); ++i) {
      if (a[i]) r = dst.add(r, dst.mul(dst.from_base(a[i]), pw));
      pw = dst.mul(pw, gen_image);
    }
    return r;
  }
}

template <class K>
std::vector<ExtField::Elem> Embedding<K>::map(const std::vector<typename K::Elem>& v) const {
  std::vector<ExtField::Elem> out;
  out.reserve(v.size());
  for (auto& a : v) out.push_back(map(a));
  return out;
}

template <class K>
std::optional<typename K::Elem> Embedding<K>::preimage(const ExtField::Elem& b) const {
  if constexpr (std::is_same_v<K, PrimeField>) {
    if (!dst.in_base(b)) return std::nullopt;
    return b[0];
  } else {
    std::vector<std::vector<uint64_t>> basis;
    ExtField::Elem pw = dst.one();
    for (unsigned i = 0; i < src.degree(); ++i) {
      basis.push_back(pw);
      pw = dst.mul(pw, gen_image);
    }
    auto c = solve_span(dst.base(), basis, b);
    if (!c) return std::nullopt;
    return src.from_coeffs(*c);
  }
}

template <class K>
Embedding<K> embed_into(const K& small, const ExtField& big, uint64_t seed) {
  if constexpr (std::is_same_v<K, PrimeField>) {
    if (small.p() != big.p()) throw FieldMismatch();
    return Embedding<K>{small, big, big.one()};
  } else {
    if (small.p() != big.p() || big.degree() % small.degree()) throw FieldMismatch();
    PolyRing<ExtField> R(big);
    std::vector<ExtField::Elem> m;
    for (auto c : small.modulus()) m.push_back(big.from_base(c));
    auto roots = roots_in_field(R, m, seed);
    if (roots.empty()) throw Error("embedding: modulus has no root in the target field");
    return Embedding<K>{small, big, roots.front()};
  }
}

ExtField make_gf(uint64_t p, unsigned d, uint64_t seed) {
  PrimeField fp(p);
  Rng rng(seed);
  return ExtField(p, random_irreducible(fp, d, rng));
}

template <class K>
Extension<K> build_extension(const K& base, const std::vector<typename K::Elem>& g0, uint64_t seed) {
  if constexpr (std::is_same_v<K, RationalField>) {
    throw CapabilityError("number fields are not supported");
  } else {
    PolyRing<K> R(base);
    auto g = R.monic(trimmed(base, g0));
    if (R.deg(g) < 1) throw PreconditionError("cannot adjoin a root of a constant");
    if (!is_irreducible(R, g)) throw PreconditionError("build_extension: polynomial is reducible");
    if constexpr (std::is_same_v<K, PrimeField>) {
      ExtField L(base.p(), g);
      auto emb = embed_into(base, L, seed);
      return Extension<K>{L, emb, L.gen()};
    } else {
      const unsigned total = base.degree() * static_cast<unsigned>(R.deg(g));
      ExtField L = make_gf(base.p(), total, seed);
      auto emb = embed_into(base, L, seed);
      PolyRing<ExtField> RL(L);
      auto roots = roots_in_field(RL, emb.map(g), seed);
      if (roots.empty()) throw Error("build_extension: no root in the compositum");
      return Extension<K>{L, emb, roots.front()};
    }
  }
}

template <class K>
Extension<K> trivial_extension(const K& k) {
  if constexpr (std::is_same_v<K, PrimeField>) {
    ExtField L(k.p(), {0, 1});
    return Extension<K>{L, Embedding<K>{k, L, L.one()}, L.zero()};
  } else if constexpr (std::is_same_v<K, ExtField>) {
    return Extension<K>{k, Embedding<K>{k, k, k.gen()}, k.zero()};
  } else {
    throw CapabilityError("number fields are not supported");
  }
}

template Extension<PrimeField> trivial_extension<PrimeField>(const PrimeField&);
template Extension<ExtField> trivial_extension<ExtField>(const ExtField&);
template Extension<RationalField> trivial_extension<RationalField>(const RationalField&);

template struct Embedding<PrimeField>;
template struct Embedding<ExtField>;
template Embedding<PrimeField> embed_into<PrimeField>(const PrimeField&, const ExtField&, uint64_t);
template Embedding<ExtField> embed_into<ExtField>(const ExtField&, const ExtField&, uint64_t);
template Extension<PrimeField> build_extension<PrimeField>(const PrimeField&, const std::vector<uint64_t>&, uint64_t);
template Extension<ExtField> build_extension<ExtField>(const ExtField&, const std::vector<ExtField::Elem>&, uint64_t);
template Extension<RationalField> build_extension<RationalField>(const RationalField&, const std::vector<mpq_class>&,
                                                                 uint64_t);

}  // namespace hyperiso
