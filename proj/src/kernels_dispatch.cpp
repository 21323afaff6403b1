#include <atomic>
#include <cstdlib>
#include <cstring>

#include "hyperiso/kernels.hpp"

namespace hyperiso::kernels {

#ifndef HYPERISO_WITH_AVX2
const Table* avx2_table() { return nullptr; }
#endif

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return avx2_table() != nullptr && __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const Table* pick_default() {
  const char* env = std::getenv("HYPERISO_KERNELS");
  if (env && std::strcmp(env, "scalar") == 0) return &scalar_table();
  return avx2_supported() ? avx2_table() : &scalar_table();
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> t{pick_default()};
  return t;
}

}  // namespace

const Table& active() { return *current().load(std::memory_order_relaxed); }

bool select(const char* name) {
  if (std::strcmp(name, "scalar") == 0) {
    current().store(&scalar_table());
    return true;
  }
  if (std::strcmp(name, "avx2") == 0 && avx2_supported()) {
    current().store(avx2_table());
    return true;
  }
  return false;
}

}  // namespace hyperiso::kernels
