#include "commutant/grid.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace commutant {

std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("grid needs at least 2 points");
  std::vector<double> ts(static_cast<std::size_t>(n));
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) ts[static_cast<std::size_t>(i)] = lo + step * i;
  ts.back() = hi;  // endpoint exact regardless of rounding
  return ts;
}

namespace detail {

void parallel_indices(std::size_t n, void* ctx, void (*body)(void*, std::size_t)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    body(ctx, static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n; ++i) body(ctx, i);
#endif
}

}  // namespace detail

}  // namespace commutant
