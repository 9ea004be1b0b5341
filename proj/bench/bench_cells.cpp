// Timing harness for the per-pattern sweeps: serial reference vs the OpenMP
// path, with a result-equality check on every row. Not a correctness test;
// built as a plain executable and run by hand.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcells/kernels.hpp"
#include "qcells/patterns.hpp"

using namespace qcells;

namespace {

double time_once(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, std::size_t count,
         const std::function<std::vector<int>(ExecMode)>& sweep) {
  std::vector<int> serial, parallel;
  const double ts = time_once([&] { serial = sweep(ExecMode::Serial); });
  const double tp = time_once([&] { parallel = sweep(ExecMode::Parallel); });
  std::printf("%-34s %8zu %10.3fs %10.3fs %7.2fx   %s\n", name.c_str(), count, ts, tp,
              ts / (tp > 0 ? tp : 1e-9), serial == parallel ? "equal" : "MISMATCH");
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d\n", threads);
  std::printf("%-34s %8s %11s %11s %8s   %s\n", "sweep", "items", "serial", "parallel",
              "speedup", "results");

  for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 8}, {4, 8}}) {
    const auto ps = all_jp(k, n);
    row("move counts (" + std::to_string(k) + "," + std::to_string(n) + ")", ps.size(),
        [&](ExecMode m) { return cell_dimensions(ps, m); });
  }

  {
    const auto ps = all_jp(2, 6);
    row("orbit ranks (2,6) full", ps.size(),
        [&](ExecMode m) { return orbit_dimensions(ps, false, m); });
    std::vector<JugglingPattern> sp;
    for (const auto& J : ps)
      if (is_symplectic(J)) sp.push_back(J);
    row("orbit ranks (2,6) symplectic", sp.size(),
        [&](ExecMode m) { return orbit_dimensions(sp, true, m); });
  }
  return 0;
}
