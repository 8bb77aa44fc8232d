#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "commutant/grid.hpp"
#include "commutant/system.hpp"

namespace commutant {

/// Constants (c2, c1, c0) of the coefficient map
///   b2 = c2 a2,  b1 = c2 a1 + c1 sqrt(a2),  b0 = c2 a0 + c1 f_A + c0.
struct PairConstants {
  double c2 = 1.0;
  double c1 = 0.0;
  double c0 = 0.0;
};

enum class Verdict { Always, NotConstant, DomainError };

const char* verdict_name(Verdict v);

/// Result of sampling the A0 bracket over the domain.
struct CommutativityReport {
  std::vector<std::pair<double, double>> samples;  // (t, A0(t))
  double a0_min = 0.0;
  double a0_max = 0.0;
  Verdict verdict = Verdict::DomainError;
  double tolerance = 0.0;
  double witness_t_min = 0.0;  // argmin / argmax, the NotConstant witness
  double witness_t_max = 0.0;
  std::string error_message;   // DomainError details
  double error_t = 0.0;

  bool always() const { return verdict == Verdict::Always; }
  /// Representative constant; meaningful when the verdict is Always.
  double constant() const { return 0.5 * (a0_min + a0_max); }
};

/// f = (2 a1 - da2/dt) / (4 sqrt(a2)). Requires a2(t) > 0.
double f_of(const LtvSystem& sys, double t);

/// The constancy bracket evaluated literally:
///   a0 - (4 a1^2 + 3 da2^2 - 8 a1 da2 + 8 da1 a2 - 4 a2 dda2) / (16 a2).
double a0_bracket(const LtvSystem& sys, double t);

/// Alternate route: a0 - f^2 - sqrt(a2) df/dt, with df/dt assembled
/// analytically from the coefficient jets. Requires a2(t) > 0. Agrees with
/// a0_bracket algebraically; the code paths are independent.
double a0_alt(const LtvSystem& sys, double t);

/// Samples a0_bracket on grid_n uniform points over the domain. Verdict
/// Always iff (max - min) <= tol * (1 + max(|min|, |max|)).
CommutativityReport check_commutativity(const LtvSystem& sys,
                                        int grid_n = kProbeGridSize,
                                        double tol = 1e-9,
                                        Exec exec = Exec::Parallel);

/// Builds the commutative conjugate with constants c. The b-coefficients
/// are emitted as closed-form expressions over the same domain. With
/// c1 != 0 the system must pass check_commutativity and have a2 > 0 on the
/// probe grid, and c2 must be positive. Throws SystemError.
LtvSystem synthesize_pair(const LtvSystem& sys, const PairConstants& c);

/// The c1 = 0 special case (feed-forward gain 1/c2, feedback gain c0):
/// commutes with any valid system, no constancy condition required.
LtvSystem feedback_pair(const LtvSystem& sys, double c2, double c0);

/// Returns (A0 of the synthesized pair, c2*A0(sys) + c0 - c1^2/(4 c2));
/// the closure identity says the two agree.
std::pair<double, double> a0_of_pair_identity(const LtvSystem& sys,
                                              const PairConstants& c);

/// Checks whether b's coefficients are an instance of the coefficient map
/// over a's, recovering the constants. Returns the constants on success;
/// on failure `why` (when given) receives the reason.
std::optional<PairConstants> verify_pair(const LtvSystem& a,
                                         const LtvSystem& b,
                                         double tol = 1e-6,
                                         std::string* why = nullptr);

/// d/dt of an expression tree, as a tree. Used to emit closed-form
/// conjugate coefficients; not a general simplifier.
ExprPtr time_derivative(const ExprPtr& e);

}  // namespace commutant
