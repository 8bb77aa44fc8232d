#include "commutant/system.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "commutant/grid.hpp"

namespace commutant {

bool Domain::contains(double t) const {
  // Tiny slack so accumulated step rounding at the right endpoint passes.
  const double slack = 1e-12 * std::max(1.0, std::abs(hi - lo));
  return t >= lo - slack && t <= hi + slack;
}

void LtvSystem::require_in_domain(double t) const {
  if (!domain_.contains(t)) {
    std::ostringstream os;
    os << "t = " << t << " outside domain [" << domain_.lo << ", "
       << domain_.hi << "] of system '" << name_ << "'";
    throw EvalError(os.str());
  }
}

std::array<Jet2, 3> LtvSystem::coeff_jets(double t) const {
  require_in_domain(t);
  static const Params kEmpty;
  return {eval_jet(a2b_, t, kEmpty), eval_jet(a1b_, t, kEmpty),
          eval_jet(a0b_, t, kEmpty)};
}

std::array<double, 3> LtvSystem::coeff_values(double t) const {
  require_in_domain(t);
  static const Params kEmpty;
  return {eval_value(a2b_, t, kEmpty), eval_value(a1b_, t, kEmpty),
          eval_value(a0b_, t, kEmpty)};
}

double LtvSystem::forcing_value(double t) const {
  if (!forcingb_) return 0.0;
  require_in_domain(t);
  static const Params kEmpty;
  return eval_value(*forcingb_, t, kEmpty);
}

LtvSystem make_system(std::string name, ExprPtr a2, ExprPtr a1, ExprPtr a0,
                      std::optional<ExprPtr> forcing, Params params,
                      Domain domain) {
  if (!(domain.lo < domain.hi)) {
    std::ostringstream os;
    os << "empty or inverted domain [" << domain.lo << ", " << domain.hi
       << "] for system '" << name << "'";
    throw SystemError(os.str());
  }
  if (!std::isfinite(domain.lo) || !std::isfinite(domain.hi))
    throw SystemError("non-finite domain for system '" + name + "'");

  LtvSystem sys;
  sys.name_ = std::move(name);
  sys.a2_ = std::move(a2);
  sys.a1_ = std::move(a1);
  sys.a0_ = std::move(a0);
  sys.forcing_ = std::move(forcing);
  sys.params_ = std::move(params);
  sys.domain_ = domain;

  auto check_bound = [&sys](const ExprPtr& e, const char* which) {
    for (const auto& p : free_params(e)) {
      if (!sys.params_.count(p))
        throw SystemError("unbound parameter '" + p + "' in " + which +
                          " of system '" + sys.name_ + "'");
    }
  };
  check_bound(sys.a2_, "a2");
  check_bound(sys.a1_, "a1");
  check_bound(sys.a0_, "a0");
  if (sys.forcing_) check_bound(*sys.forcing_, "rhs");

  sys.a2b_ = bind_params(sys.a2_, sys.params_);
  sys.a1b_ = bind_params(sys.a1_, sys.params_);
  sys.a0b_ = bind_params(sys.a0_, sys.params_);
  if (sys.forcing_) sys.forcingb_ = bind_params(*sys.forcing_, sys.params_);

  // Probe a2 != 0 on the canonical grid.
  static const Params kEmpty;
  double min_abs = std::numeric_limits<double>::infinity();
  double min_t = domain.lo;
  for (double t : uniform_grid(domain.lo, domain.hi, kProbeGridSize)) {
    double v;
    try {
      v = eval_value(sys.a2b_, t, kEmpty);
    } catch (const EvalError& ex) {
      std::ostringstream os;
      os << "a2 of system '" << sys.name_ << "' fails at t = " << t << ": "
         << ex.what();
      throw SystemError(os.str());
    }
    if (std::abs(v) < min_abs) {
      min_abs = std::abs(v);
      min_t = t;
    }
  }
  if (min_abs <= 1e-12) {
    std::ostringstream os;
    os << "a2 of system '" << sys.name_ << "' vanishes at t = " << min_t
       << " (|a2| = " << min_abs << ")";
    throw SystemError(os.str());
  }
  return sys;
}

LtvSystem make_system(std::string name, const std::string& a2,
                      const std::string& a1, const std::string& a0,
                      const std::optional<std::string>& forcing, Params params,
                      Domain domain) {
  std::optional<ExprPtr> rhs;
  if (forcing) rhs = parse_expr(*forcing);
  return make_system(std::move(name), parse_expr(a2), parse_expr(a1),
                     parse_expr(a0), std::move(rhs), std::move(params), domain);
}

}  // namespace commutant
