#include "commutant/sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace commutant {

const std::vector<double>& Trajectory::column(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return columns[i];
  throw std::out_of_range("no trajectory column named '" + name + "'");
}

namespace {

long long step_count(double t0, double t1, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(t1 > t0)) throw std::invalid_argument("t1 must exceed t0");
  const double ratio = (t1 - t0) / dt;
  const long long n = std::llround(ratio);
  if (n < 1 || std::abs(ratio - static_cast<double>(n)) >
                   1e-9 * std::max(1.0, ratio))
    throw std::invalid_argument("(t1 - t0)/dt must be an integer step count");
  return n;
}

// Derivative of the augmented cascade state. state holds (y_i, dy_i) per
// stage; stage 0 sees the input signal, stage i sees stage i-1's y.
void chain_deriv(std::span<const LtvSystem> chain, const InputSignal& input,
                 double t, const std::vector<double>& state,
                 std::vector<double>& deriv) {
  double drive = input(t);
  for (std::size_t s = 0; s < chain.size(); ++s) {
    const double y = state[2 * s];
    const double dy = state[2 * s + 1];
    const auto [a2, a1, a0] = chain[s].coeff_values(t);
    deriv[2 * s] = dy;
    deriv[2 * s + 1] = (drive - a1 * dy - a0 * y) / a2;
    drive = y;  // next stage is driven by this stage's output
  }
}

}  // namespace

Trajectory simulate_chain(std::span<const LtvSystem> chain,
                          const InputSignal& input,
                          std::span<const InitialConditions> ics, double t0,
                          double t1, double dt) {
  if (chain.empty()) throw std::invalid_argument("empty chain");
  if (!ics.empty() && ics.size() != chain.size())
    throw std::invalid_argument("need one initial condition per stage");
  for (const LtvSystem& sys : chain) {
    if (!sys.domain().contains(t0) || !sys.domain().contains(t1)) {
      std::ostringstream os;
      os << "integration window [" << t0 << ", " << t1
         << "] outside domain of system '" << sys.name() << "'";
      throw IntegrationError(os.str());
    }
  }
  const long long n = step_count(t0, t1, dt);

  const std::size_t dim = 2 * chain.size();
  std::vector<double> state(dim, 0.0);
  for (std::size_t s = 0; s < ics.size(); ++s) {
    state[2 * s] = ics[s].y0;
    state[2 * s + 1] = ics[s].dy0;
  }

  Trajectory traj;
  traj.t0 = t0;
  traj.dt = dt;
  traj.names.push_back("input");
  for (std::size_t s = 1; s <= chain.size(); ++s) {
    traj.names.push_back("y" + std::to_string(s));
    traj.names.push_back("dy" + std::to_string(s));
  }
  traj.columns.assign(traj.names.size(),
                      std::vector<double>());
  for (auto& col : traj.columns) col.reserve(static_cast<std::size_t>(n) + 1);

  auto record = [&](double t) {
    traj.columns[0].push_back(input(t));
    for (std::size_t s = 0; s < chain.size(); ++s) {
      traj.columns[1 + 2 * s].push_back(state[2 * s]);
      traj.columns[2 + 2 * s].push_back(state[2 * s + 1]);
    }
  };
  record(t0);

  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  for (long long i = 0; i < n; ++i) {
    const double t = t0 + dt * static_cast<double>(i);
    const double th = t + 0.5 * dt;
    const double tn = t0 + dt * static_cast<double>(i + 1);

    chain_deriv(chain, input, t, state, k1);
    for (std::size_t j = 0; j < dim; ++j) tmp[j] = state[j] + 0.5 * dt * k1[j];
    chain_deriv(chain, input, th, tmp, k2);
    for (std::size_t j = 0; j < dim; ++j) tmp[j] = state[j] + 0.5 * dt * k2[j];
    chain_deriv(chain, input, th, tmp, k3);
    for (std::size_t j = 0; j < dim; ++j) tmp[j] = state[j] + dt * k3[j];
    chain_deriv(chain, input, tn, tmp, k4);
    for (std::size_t j = 0; j < dim; ++j)
      state[j] += dt / 6.0 * (k1[j] + 2.0 * (k2[j] + k3[j]) + k4[j]);

    for (double v : state) {
      if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "non-finite state after step " << (i + 1) << " (t = " << tn
           << ")";
        throw IntegrationError(os.str());
      }
    }
    record(tn);
  }
  return traj;
}

Trajectory integrate(const LtvSystem& sys, const InputSignal& input,
                     InitialConditions ic, double t0, double t1, double dt) {
  return simulate_chain(std::span<const LtvSystem>(&sys, 1), input,
                        std::span<const InitialConditions>(&ic, 1), t0, t1,
                        dt);
}

std::array<std::complex<double>, 2> averaged_eigenvalues(const LtvSystem& sys,
                                                         Domain window) {
  if (!(window.lo < window.hi))
    throw std::invalid_argument("empty averaging window");
  if (!sys.domain().contains(window.lo) || !sys.domain().contains(window.hi))
    throw std::invalid_argument("averaging window outside system domain");

  constexpr int kQuadPoints = 10001;
  const double h = (window.hi - window.lo) / (kQuadPoints - 1);
  double sum[3] = {0.0, 0.0, 0.0};
  for (int i = 0; i < kQuadPoints; ++i) {
    const double t = window.lo + h * i;
    const auto c = sys.coeff_values(t);
    const double w = (i == 0 || i == kQuadPoints - 1) ? 0.5 : 1.0;
    for (int j = 0; j < 3; ++j) sum[j] += w * c[j];
  }
  const double span = window.hi - window.lo;
  const double avg2 = sum[0] * h / span;
  const double avg1 = sum[1] * h / span;
  const double avg0 = sum[2] * h / span;
  if (std::abs(avg2) < 1e-300)
    throw IntegrationError("averaged a2 is degenerate");

  const double p = avg1 / avg2;
  const double q = avg0 / avg2;
  const double disc = p * p - 4.0 * q;
  if (disc >= 0.0) {
    const double r = std::sqrt(disc);
    return {std::complex<double>((-p + r) / 2.0, 0.0),
            std::complex<double>((-p - r) / 2.0, 0.0)};
  }
  const double im = std::sqrt(-disc) / 2.0;
  return {std::complex<double>(-p / 2.0, im),
          std::complex<double>(-p / 2.0, -im)};
}

}  // namespace commutant
