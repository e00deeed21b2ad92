// Timing comparison of the series kernels across every backend available
// on this machine.  Not part of the test suite.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "etastrip/kernel.hpp"

using namespace etastrip;

namespace {

double time_backend(const kernels::Backend& backend, std::size_t terms,
                    int repetitions) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> w(kernels::padded(terms), 0.0);
  for (std::size_t k = 0; k < terms; ++k) w[k] = dist(rng);
  const auto ln = kernels::log_table(w.size());

  volatile double sink = 0.0;
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < repetitions; ++r) {
    const auto sums =
        backend.dirichlet(w, ln, 0.5 + 1e-9 * r, 37.0 + 0.1 * r);
    sink = sink + sums.cos_sum + sums.sin_sum;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  (void)sink;
  return elapsed;
}

}  // namespace

int main() {
  const std::size_t sizes[] = {32, 128, 512, 2000};
  std::printf("%-8s %10s %14s %14s\n", "kernel", "terms", "ns/term", "terms/s");
  for (const auto* backend : kernels::available()) {
    for (std::size_t terms : sizes) {
      const int reps = static_cast<int>(4000000 / terms) + 1;
      const double seconds = time_backend(*backend, terms, reps);
      const double total_terms = static_cast<double>(terms) * reps;
      std::printf("%-8s %10zu %14.2f %14.3e\n", backend->name, terms,
                  1e9 * seconds / total_terms, total_terms / seconds);
    }
  }
  return 0;
}
