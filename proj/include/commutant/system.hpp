#pragma once

#include <array>
#include <optional>
#include <string>

#include "commutant/expr.hpp"

namespace commutant {

/// Closed interval of t over which a system's coefficients are valid.
struct Domain {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double t) const;
};

/// Invalid system definition (vanishing leading coefficient, unbound
/// parameter, bad domain).
class SystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InitialConditions {
  double y0 = 0.0;
  double dy0 = 0.0;
};

/// Number of points in the canonical uniform probe grid used to validate
/// and compare systems.
inline constexpr int kProbeGridSize = 1001;

/// Second-order linear time-varying system
///   a2(t) y'' + a1(t) y' + a0(t) y = x(t)
/// with named parameters and a validity domain. Immutable; coefficient
/// evaluation is pure.
class LtvSystem {
 public:
  const std::string& name() const { return name_; }
  const ExprPtr& a2() const { return a2_; }
  const ExprPtr& a1() const { return a1_; }
  const ExprPtr& a0() const { return a0_; }
  const std::optional<ExprPtr>& forcing() const { return forcing_; }
  const Params& params() const { return params_; }
  const Domain& domain() const { return domain_; }

  /// Jets of (a2, a1, a0) at t with parameters substituted.
  std::array<Jet2, 3> coeff_jets(double t) const;

  /// Values of (a2, a1, a0) at t; the integrator's hot path.
  std::array<double, 3> coeff_values(double t) const;

  double forcing_value(double t) const;  // 0 when no forcing is recorded

 private:
  friend LtvSystem make_system(std::string, ExprPtr, ExprPtr, ExprPtr,
                               std::optional<ExprPtr>, Params, Domain);
  LtvSystem() = default;

  void require_in_domain(double t) const;

  std::string name_;
  ExprPtr a2_, a1_, a0_;
  std::optional<ExprPtr> forcing_;
  Params params_;
  Domain domain_;
  // Parameter-substituted trees, cached so evaluation needs no map lookups.
  ExprPtr a2b_, a1b_, a0b_;
  std::optional<ExprPtr> forcingb_;
};

/// Validates and builds a system: every free identifier must be bound by
/// `params`, the domain must be a proper interval, and |a2| must exceed
/// 1e-12 at every point of the canonical probe grid. Throws SystemError.
LtvSystem make_system(std::string name, ExprPtr a2, ExprPtr a1, ExprPtr a0,
                      std::optional<ExprPtr> forcing, Params params,
                      Domain domain);

/// Convenience overload parsing the coefficient texts.
LtvSystem make_system(std::string name, const std::string& a2,
                      const std::string& a1, const std::string& a0,
                      const std::optional<std::string>& forcing, Params params,
                      Domain domain);

}  // namespace commutant
