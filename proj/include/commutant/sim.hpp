#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "commutant/signal.hpp"
#include "commutant/system.hpp"

namespace commutant {

/// Numeric failure during integration (non-finite state, domain exit).
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniformly sampled named time series. Column 0 is the input; each stage i
/// contributes columns y<i> and dy<i>.
struct Trajectory {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;  // one per name, equal lengths

  std::size_t rows() const { return columns.empty() ? 0 : columns[0].size(); }
  double time_at(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
  const std::vector<double>& column(const std::string& name) const;
};

/// Classic fixed-step RK4 over [t0, t1], which must lie inside the system
/// domain; (t1 - t0)/dt must be an integer. Stage evaluations of
/// coefficients and input happen at t, t + dt/2, and t + dt.
Trajectory integrate(const LtvSystem& sys, const InputSignal& input,
                     InitialConditions ic, double t0, double t1, double dt);

/// Co-integrated cascade: all stages advance together in one augmented RK4
/// state, stage i+1 driven by stage i's current y within each RK4 stage.
/// `ics` may be empty (all zero) or one entry per stage.
Trajectory simulate_chain(std::span<const LtvSystem> chain,
                          const InputSignal& input,
                          std::span<const InitialConditions> ics, double t0,
                          double t1, double dt);

/// Roots of avg(a2) s^2 + avg(a1) s + avg(a0) = 0 with coefficient averages
/// taken over `window` by 10001-point trapezoid quadrature.
std::array<std::complex<double>, 2> averaged_eigenvalues(const LtvSystem& sys,
                                                         Domain window);

}  // namespace commutant
