#include "commutant/signal.hpp"

#include <cmath>
#include <numbers>

namespace commutant {

InputSignal InputSignal::sine_saw() {
  InputSignal s;
  s.kind_ = Kind::SineSaw;
  return s;
}

InputSignal InputSignal::pulse_train() {
  InputSignal s;
  s.kind_ = Kind::PulseTrain;
  return s;
}

InputSignal InputSignal::zero() { return InputSignal{}; }

InputSignal InputSignal::expression(ExprPtr e, Params params) {
  InputSignal s;
  s.kind_ = Kind::Expr;
  s.expr_ = bind_params(e, params);
  for (const auto& p : free_params(s.expr_))
    throw EvalError("unresolved parameter '" + p + "' in input signal");
  return s;
}

InputSignal InputSignal::from_spec(const std::string& spec) {
  if (spec == "sine-saw") return sine_saw();
  if (spec == "pulse") return pulse_train();
  if (spec == "zero") return zero();
  if (spec.rfind("expr:", 0) == 0)
    return expression(parse_expr(spec.substr(5)));
  throw std::invalid_argument("unknown input spec '" + spec +
                              "' (expected sine-saw, pulse, zero, or expr:<E>)");
}

double InputSignal::operator()(double t) const {
  switch (kind_) {
    case Kind::SineSaw: {
      const double saw_phase = t / 3.3 - std::floor(t / 3.3);  // in [0, 1)
      const double saw = -30.0 + 60.0 * saw_phase;
      return 30.0 * std::sin(1.2 * std::numbers::pi * t) + saw;
    }
    case Kind::PulseTrain: {
      const double phase = t - 5.0 * std::floor(t / 5.0);
      return phase < 0.5 ? 30.0 : 0.0;
    }
    case Kind::Expr: {
      static const Params kEmpty;
      return eval_value(expr_, t, kEmpty);
    }
    case Kind::Zero:
      return 0.0;
  }
  return 0.0;
}

std::string InputSignal::describe() const {
  switch (kind_) {
    case Kind::SineSaw: return "sine-saw";
    case Kind::PulseTrain: return "pulse";
    case Kind::Expr: return "expr:" + to_string(expr_);
    case Kind::Zero: return "zero";
  }
  return "?";
}

}  // namespace commutant
