#include "hyperiso/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include <fmt/format.h>

namespace hyperiso {

template <class K>
BenchInstance<K> bench_instance(const FormOps<K>& ops, int g, Rng& rng) {
  const K& k = ops.field();
  const int n = 2 * g + 2;
  auto small = [&]() { return k.from_int(static_cast<long long>(rng() % 5) - 2); };
  BenchInstance<K> b;
  for (;;) {
    if constexpr (K::finite) {
      b.f1 = ops.random(n, rng);
    } else {
      b.f1.a.clear();
      for (int i = 0; i <= n; ++i) b.f1.a.push_back(small());
    }
    if (k.is_zero(b.f1.a[n]) || ops.distinct_roots(b.f1) < 3) continue;
    if (n <= 64 && k.is_zero(ops.discriminant(b.f1))) continue;
    break;
  }
  for (;;) {
    if constexpr (K::finite) {
      b.M0 = Moebius<K>{k.random(rng), k.random(rng), k.random(rng), k.random(rng)};
    } else {
      b.M0 = Moebius<K>{small(), small(), small(), small()};
    }
    if (!k.is_zero(ops.det(b.M0))) break;
  }
  b.f2 = ops.act(b.M0, b.f1);
  return b;
}

namespace {

template <class K>
void run_field(const K& k, const BenchConfig& cfg, std::vector<BenchRow>& rows) {
  FormOps<K> ops(k);
  for (const auto& method : cfg.methods) {
    bool capped = false;
    for (int g : cfg.gs) {
      BenchRow row{cfg.field, method, g};
      if (capped) {
        row.capped = true;
        rows.push_back(row);
        continue;
      }
      // instances depend only on (seed, g), not on the method
      Rng rng(cfg.seed * 1000003 + static_cast<uint64_t>(g));
      std::vector<double> times;
      for (int t = 0; t < cfg.trials; ++t) {
        auto inst = bench_instance(ops, g, rng);
        auto t0 = std::chrono::steady_clock::now();
        IsomResult<K> r;
        try {
          r = method == "fast" ? is_gl2_equiv_fast(ops, inst.f1, inst.f2) : is_gl2_equiv_covariant(ops, inst.f1, inst.f2);
        } catch (const CapabilityError&) {
          ++row.failures;
          continue;
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        times.push_back(dt);
        row.fallbacks += r.fallback;
        bool hit = std::any_of(r.matrices.begin(), r.matrices.end(),
                               [&](const Moebius<K>& m) { return ops.proj_equal(m, inst.M0); });
        row.failures += !hit;
        if (dt > cfg.time_cap) {
          capped = true;
          break;
        }
      }
      row.trials = static_cast<int>(times.size());
      if (capped) {
        row.capped = true;
      } else if (!times.empty()) {
        std::sort(times.begin(), times.end());
        row.median = times[times.size() / 2];
      }
      rows.push_back(row);
    }
  }
}

}  // namespace

std::vector<BenchRow> bench_table(const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  if (cfg.field == "Q") {
    run_field(RationalField{}, cfg, rows);
  } else if (!cfg.field.empty() && cfg.field[0] == 'F') {
    run_field(PrimeField(std::stoull(cfg.field.substr(1))), cfg, rows);
  } else {
    throw PreconditionError("bench field must be Q or F<p>, got " + cfg.field);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "field,method,g,median_s,trials,failures,fallbacks\n";
  for (auto& r : rows)
    os << r.field << ',' << r.method << ',' << r.g << ',' << (r.capped ? "-" : fmt::format("{:.6f}", r.median)) << ','
       << r.trials << ',' << r.failures << ',' << r.fallbacks << '\n';
  return os.str();
}

std::string bench_markdown(const std::vector<BenchRow>& rows) {
  // one line per (field, method), one column per g
  std::vector<int> gs;
  std::map<std::pair<std::string, std::string>, std::map<int, std::string>> cells;
  std::vector<std::pair<std::string, std::string>> order;
  for (auto& r : rows) {
    if (std::find(gs.begin(), gs.end(), r.g) == gs.end()) gs.push_back(r.g);
    auto key = std::make_pair(r.field, r.method);
    if (!cells.count(key)) order.push_back(key);
    cells[key][r.g] = r.capped ? "-" : fmt::format("{:.3g}", r.median);
  }
  std::ostringstream os;
  os << "| field | method |";
  for (int g : gs) os << " g=" << g << " |";
  os << "\n|---|---|";
  for (size_t i = 0; i < gs.size(); ++i) os << "---|";
  os << "\n";
  for (auto& key : order) {
    os << "| " << key.first << " | " << key.second << " |";
    for (int g : gs) os << ' ' << (cells[key].count(g) ? cells[key][g] : "") << " |";
    os << "\n";
  }
  return os.str();
}

template BenchInstance<RationalField> bench_instance<RationalField>(const FormOps<RationalField>&, int, Rng&);
template BenchInstance<PrimeField> bench_instance<PrimeField>(const FormOps<PrimeField>&, int, Rng&);

}  // namespace hyperiso
