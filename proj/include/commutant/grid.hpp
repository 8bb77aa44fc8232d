#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace commutant {

/// Execution lane for grid-sized batch work. Serial is the reference
/// implementation; Parallel uses OpenMP when compiled in and must produce
/// bitwise-identical values (each slot is written independently, reductions
/// run serially afterwards).
enum class Exec { Serial, Parallel };

/// Uniform grid of n >= 2 points including both endpoints.
std::vector<double> uniform_grid(double lo, double hi, int n);

struct SampleFailure {
  std::size_t index = 0;
  double t = 0.0;
  std::string message;
};

struct SampleOutcome {
  std::vector<double> values;             // undefined past a failure
  std::optional<SampleFailure> failure;   // first failing point by index
  bool ok() const { return !failure.has_value(); }
};

namespace detail {
void parallel_indices(std::size_t n, void* ctx, void (*body)(void*, std::size_t));
}

/// Evaluates f over the grid points. Exceptions thrown by f are captured per
/// point; the failure with the smallest index is reported, making the result
/// independent of thread scheduling.
template <class F>
SampleOutcome sample_grid(const std::vector<double>& ts, F&& f, Exec exec) {
  SampleOutcome out;
  out.values.resize(ts.size());
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      try {
        out.values[i] = f(ts[i]);
      } catch (const std::exception& ex) {
        out.failure = SampleFailure{i, ts[i], ex.what()};
        return out;
      }
    }
    return out;
  }
  std::vector<std::string> errors(ts.size());
  std::vector<char> failed(ts.size(), 0);
  struct Ctx {
    const std::vector<double>& ts;
    F& f;
    std::vector<double>& values;
    std::vector<std::string>& errors;
    std::vector<char>& failed;
  } ctx{ts, f, out.values, errors, failed};
  detail::parallel_indices(ts.size(), &ctx, [](void* p, std::size_t i) {
    auto& c = *static_cast<Ctx*>(p);
    try {
      c.values[i] = c.f(c.ts[i]);
    } catch (const std::exception& ex) {
      c.errors[i] = ex.what();
      c.failed[i] = 1;
    }
  });
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (failed[i]) {
      out.failure = SampleFailure{i, ts[i], errors[i]};
      break;
    }
  }
  return out;
}

}  // namespace commutant
