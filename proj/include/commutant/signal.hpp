#pragma once

#include <string>

#include "commutant/expr.hpp"

namespace commutant {

/// Input signal generators for the cascade demos.
///
/// SineSaw: 30 sin(1.2 pi t) plus a sawtooth of period 3.3 s rising
/// linearly from -30 at each period start to +30; saw(0) = -30.
/// PulseTrain: amplitude 30, period 5 s, 10% width (30 while t mod 5 < 0.5).
class InputSignal {
 public:
  enum class Kind { SineSaw, PulseTrain, Expr, Zero };

  static InputSignal sine_saw();
  static InputSignal pulse_train();
  static InputSignal zero();
  static InputSignal expression(ExprPtr e, Params params = {});
  /// Parses "sine-saw", "pulse", "zero", or "expr:<expression>".
  static InputSignal from_spec(const std::string& spec);

  double operator()(double t) const;
  Kind kind() const { return kind_; }
  std::string describe() const;

 private:
  InputSignal() = default;
  Kind kind_ = Kind::Zero;
  ExprPtr expr_;  // bound; Kind::Expr only
};

}  // namespace commutant
