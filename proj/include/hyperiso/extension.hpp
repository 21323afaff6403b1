#pragma once

#include <optional>
#include <vector>

#include "hyperiso/roots.hpp"

namespace hyperiso {

// Field embedding of a finite field K into a larger ExtField.
template <class K>
struct Embedding {
  K src;
  ExtField dst;
  ExtField::Elem gen_image;  // image of the generator of src (unused for prime fields)

  ExtField::Elem map(const typename K::Elem& a) const;
  std::optional<typename K::Elem> preimage(const ExtField::Elem& b) const;
  std::vector<ExtField::Elem> map(const std::vector<typename K::Elem>& v) const;
};

template <class K>
Embedding<K> embed_into(const K& small, const ExtField& big, uint64_t seed = 1);

template <class K>
struct Extension {
  ExtField field;
  Embedding<K> embedding;
  ExtField::Elem root;
};

// Adjoin a root of the irreducible g to the finite field base, realized as a
// single extension of F_p.
template <class K>
Extension<K> build_extension(const K& base, const std::vector<typename K::Elem>& g, uint64_t seed = 1);

// K itself as a degree 1 extension, represented as an ExtField
template <class K>
Extension<K> trivial_extension(const K& k);

// F_{p^d} with a random irreducible modulus drawn from seed
ExtField make_gf(uint64_t p, unsigned d, uint64_t seed = 1);

}  // namespace hyperiso
