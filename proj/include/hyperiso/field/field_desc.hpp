#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hyperiso {

// Serializable description of a base field: Q when characteristic == 0,
// F_p when degree == 1, otherwise F_p[t]/(modulus).
struct FieldDesc {
  mpz_class characteristic = 0;
  unsigned degree = 1;
  std::vector<mpz_class> modulus;  // c0..cr, monic, empty unless degree > 1

  bool is_rational() const { return characteristic == 0; }
  bool operator==(const FieldDesc& o) const {
    return characteristic == o.characteristic && degree == o.degree && modulus == o.modulus;
  }
  std::string str() const;
};

}  // namespace hyperiso
