#include <cstdio>
#include <cstdlib>
#include <string_view>

#include "etastrip/errors.hpp"
#include "etastrip/kernel.hpp"

namespace etastrip::kernels {

extern const Backend kScalarBackend;
#if defined(__x86_64__) || defined(_M_X64)
extern const Backend kAvx2Backend;
#endif

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Backend* widest_simd() {
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_has_avx2()) return &kAvx2Backend;
#endif
  return nullptr;
}

const Backend* select() {
  const char* env = std::getenv("ETASTRIP_KERNEL");
  const std::string_view want = env ? env : "auto";
  if (want == "scalar") return &kScalarBackend;
  const Backend* simd = widest_simd();
  if (want == "avx2") {
    if (simd) return simd;
    std::fprintf(stderr, "etastrip: ETASTRIP_KERNEL=avx2 not available on this CPU, using scalar\n");
    return &kScalarBackend;
  }
  if (want != "auto")
    std::fprintf(stderr, "etastrip: unknown ETASTRIP_KERNEL '%s', using auto selection\n", env);
  return simd ? simd : &kScalarBackend;
}

}  // namespace

const Backend& active() {
  static const Backend* selected = select();
  return *selected;
}

const Backend* find(std::string_view name) {
  if (name == "scalar") return &kScalarBackend;
#if defined(__x86_64__) || defined(_M_X64)
  if (name == "avx2" && cpu_has_avx2()) return &kAvx2Backend;
#endif
  return nullptr;
}

std::vector<const Backend*> available() {
  std::vector<const Backend*> out{&kScalarBackend};
  if (const Backend* simd = widest_simd()) out.push_back(simd);
  return out;
}

std::span<const double> log_table(std::size_t n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(padded(kTermBudget) + kPad);
    for (std::size_t k = 0; k < t.size(); ++k)
      t[k] = std::log(static_cast<double>(k + 1));
    return t;
  }();
  if (n > table.size())
    throw ConvergenceError("series term count exceeds the supported budget");
  return {table.data(), n};
}

}  // namespace etastrip::kernels
