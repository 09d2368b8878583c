// Wall-clock comparison of the OpenMP kernels with their serial references.
// Usage: bench_kernels [repeats]

#include <omp.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>

#include "gwtail/kmg.hpp"
#include "gwtail/oracle.hpp"
#include "gwtail/poincare.hpp"

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = INFINITY;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-22s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "identical" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  constexpr std::array<double, 4> p = {0.0, 0.1, 0.5, 0.4};
  const auto dist = gwtail::OffspringDistribution::validate(p);
  const gwtail::PiEvaluator ev(dist);

  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), repeats);
  std::printf("%-22s %10s %10s %9s\n", "kernel", "serial s", "openmp s", "speedup");

  {
    const gwtail::ComplexWindow w{-2.0, 2.0, -1.5, 1.5};
    gwtail::EscapeRaster a, b;
    const double s = best_of(repeats, [&] { a = gwtail::julia_escape_grid_serial(dist, w, 800, 600, 200); });
    const double t = best_of(repeats, [&] { b = gwtail::julia_escape_grid(dist, w, 800, 600, 200); });
    row("julia 800x600", s, t, a.iterations == b.iterations);
  }
  {
    const double shift = std::numbers::pi / (2.0 * std::log(dist.mean()));
    std::vector<gwtail::cplx> a, b;
    const double s = best_of(repeats, [&] { a = gwtail::sample_K_line_serial(ev, 2.0, 8192, shift); });
    const double t = best_of(repeats, [&] { b = gwtail::sample_K_line(ev, 2.0, 8192, shift); });
    row("K line, 8192 samples", s, t, a == b);
  }
  {
    const auto xs = gwtail::linear_grid(0.0, 4.0, 64);
    gwtail::DensityProfile a, b;
    const double s = best_of(repeats, [&] { a = gwtail::oracle_profile_serial(ev, xs); });
    const double t = best_of(repeats, [&] { b = gwtail::oracle_profile(ev, xs); });
    row("oracle, 64 points", s, t, a.values == b.values);
  }
  {
    gwtail::SimulationConfig cfg;
    cfg.samples = 200'000;
    std::vector<double> a, b;
    const double s = best_of(repeats, [&] { a = gwtail::simulate_W_serial(dist, cfg); });
    const double t = best_of(repeats, [&] { b = gwtail::simulate_W(dist, cfg); });
    row("simulate 2e5 x 25", s, t, a == b);
  }
  return 0;
}
