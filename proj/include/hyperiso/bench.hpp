#pragma once

#include <string>
#include <vector>

#include "hyperiso/covariant_isom.hpp"

namespace hyperiso {

struct BenchConfig {
  std::vector<int> gs{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
  std::string field = "F10007";  // "F<p>" or "Q"
  std::vector<std::string> methods{"fast", "covariant"};
  int trials = 5;
  uint64_t seed = 1;
  double time_cap = 300;  // seconds per trial
};

struct BenchRow {
  std::string field, method;
  int g = 0;
  double median = 0;  // seconds
  int trials = 0;
  int failures = 0;   // runs whose output missed the planted isomorphism
  int fallbacks = 0;
  bool capped = false;  // shown as '-'
};

// Random instance f2 = act(M0, f1) of degree 2g + 2; over Q the coefficients
// of f1 lie in [-2, 2] and M0 has entries in [-2, 2].
template <class K>
struct BenchInstance {
  Form<K> f1, f2;
  Moebius<K> M0;
};

template <class K>
BenchInstance<K> bench_instance(const FormOps<K>& ops, int g, Rng& rng);

// Each row: median wall time of the method on freshly generated instances;
// once a trial exceeds the cap, that row and all larger g for the method are '-'.
std::vector<BenchRow> bench_table(const BenchConfig& cfg);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_markdown(const std::vector<BenchRow>& rows);

}  // namespace hyperiso
