// Benchmark of the OpenMP lanes against their serial reference: A0-bracket
// grid sampling, full table verification, and the multi-structure demo batch.

#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "commutant/catalog.hpp"
#include "commutant/channel.hpp"

using namespace commutant;

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

template <class F>
double time_best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const double start = now();
    f();
    best = std::min(best, now() - start);
  }
  return best;
}

void report(const char* name, double serial_s, double parallel_s) {
  std::printf("%-34s serial %8.4f s   parallel %8.4f s   speedup %.2fx\n",
              name, serial_s, parallel_s, serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
  int grid_n = 400000;
  int repeats = 3;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--grid" && i + 1 < argc) grid_n = std::stoi(argv[++i]);
    else if (arg == "--repeat" && i + 1 < argc) repeats = std::stoi(argv[++i]);
    else {
      std::printf("usage: commutant-bench [--grid N] [--repeat R]\n");
      return 2;
    }
  }
#ifdef _OPENMP
  std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not compiled in (parallel lane runs serially)\n");
#endif

  const LtvSystem sys = paper5_system_a();
  const auto ts = uniform_grid(sys.domain().lo, sys.domain().hi, grid_n);
  const auto bracket = [&sys](double t) { return a0_bracket(sys, t); };

  // Checksum guards against the work being optimized away and doubles as a
  // serial/parallel agreement check.
  double sum_serial = 0.0, sum_parallel = 0.0;
  const double t_serial = time_best_of(repeats, [&] {
    const auto out = sample_grid(ts, bracket, Exec::Serial);
    sum_serial = out.values.front() + out.values.back();
  });
  const double t_parallel = time_best_of(repeats, [&] {
    const auto out = sample_grid(ts, bracket, Exec::Parallel);
    sum_parallel = out.values.front() + out.values.back();
  });
  std::printf("A0 bracket sampling, %d points (checksums %.17g / %.17g)\n",
              grid_n, sum_serial, sum_parallel);
  report("  sample_grid", t_serial, t_parallel);

  const Catalog& cat = Catalog::standard();
  const double v_serial =
      time_best_of(repeats, [&] { verify_tables(cat, 1e-9, 0x5eedu, Exec::Serial); });
  const double v_parallel = time_best_of(
      repeats, [&] { verify_tables(cat, 1e-9, 0x5eedu, Exec::Parallel); });
  report("verify_tables (30 entries)", v_serial, v_parallel);

  const LtvSystem a = paper5_system_a();
  const LtvSystem b = paper5_system_b();
  const auto structures = enumerate_structures(2, 2);
  const InputSignal input = InputSignal::sine_saw();
  const double d_serial = time_best_of(repeats, [&] {
    run_demo(a, b, input, structures, 0.0, 20.0, 2e-3, 1e-3, 0.1, false,
             Exec::Serial);
  });
  const double d_parallel = time_best_of(repeats, [&] {
    run_demo(a, b, input, structures, 0.0, 20.0, 2e-3, 1e-3, 0.1, false,
             Exec::Parallel);
  });
  report("demo batch (4 structures)", d_serial, d_parallel);
  return 0;
}
