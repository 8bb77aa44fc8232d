#include "commutant/commutativity.hpp"

#include <cmath>
#include <sstream>

namespace commutant {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Always: return "Always";
    case Verdict::NotConstant: return "NotConstant";
    case Verdict::DomainError: return "DomainError";
  }
  return "?";
}

namespace {

double sqrt_a2(const Jet2& a2, const LtvSystem& sys, double t) {
  if (a2.v <= 0.0) {
    std::ostringstream os;
    os << "a2 of system '" << sys.name() << "' is not positive at t = " << t
       << " (a2 = " << a2.v << ")";
    throw EvalError(os.str());
  }
  return std::sqrt(a2.v);
}

}  // namespace

double f_of(const LtvSystem& sys, double t) {
  const auto [a2, a1, a0] = sys.coeff_jets(t);
  (void)a0;
  return (2.0 * a1.v - a2.d1) / (4.0 * sqrt_a2(a2, sys, t));
}

double a0_bracket(const LtvSystem& sys, double t) {
  const auto [a2, a1, a0] = sys.coeff_jets(t);
  const double num = 4.0 * a1.v * a1.v + 3.0 * a2.d1 * a2.d1 -
                     8.0 * a1.v * a2.d1 + 8.0 * a1.d1 * a2.v -
                     4.0 * a2.v * a2.d2;
  return a0.v - num / (16.0 * a2.v);
}

double a0_alt(const LtvSystem& sys, double t) {
  const auto [a2, a1, a0] = sys.coeff_jets(t);
  const double root = sqrt_a2(a2, sys, t);
  const double f = (2.0 * a1.v - a2.d1) / (4.0 * root);
  // df/dt = [(2 da1 - dda2) - (2 a1 - da2) da2 / (2 a2)] / (4 sqrt(a2))
  const double fdot =
      ((2.0 * a1.d1 - a2.d2) -
       (2.0 * a1.v - a2.d1) * a2.d1 / (2.0 * a2.v)) /
      (4.0 * root);
  return a0.v - f * f - root * fdot;
}

CommutativityReport check_commutativity(const LtvSystem& sys, int grid_n,
                                        double tol, Exec exec) {
  if (grid_n < 3) throw std::invalid_argument("grid_n must be at least 3");
  CommutativityReport report;
  report.tolerance = tol;

  const auto ts = uniform_grid(sys.domain().lo, sys.domain().hi, grid_n);
  const auto outcome =
      sample_grid(ts, [&sys](double t) { return a0_bracket(sys, t); }, exec);
  if (!outcome.ok()) {
    report.verdict = Verdict::DomainError;
    report.error_message = outcome.failure->message;
    report.error_t = outcome.failure->t;
    return report;
  }

  report.samples.reserve(ts.size());
  std::size_t imin = 0, imax = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    report.samples.emplace_back(ts[i], outcome.values[i]);
    if (outcome.values[i] < outcome.values[imin]) imin = i;
    if (outcome.values[i] > outcome.values[imax]) imax = i;
  }
  report.a0_min = outcome.values[imin];
  report.a0_max = outcome.values[imax];
  report.witness_t_min = ts[imin];
  report.witness_t_max = ts[imax];

  const double spread = report.a0_max - report.a0_min;
  const double scale =
      1.0 + std::max(std::abs(report.a0_min), std::abs(report.a0_max));
  report.verdict =
      spread <= tol * scale ? Verdict::Always : Verdict::NotConstant;
  return report;
}

// ---------------------------------------------------------------------------
// Symbolic time derivative (internal; enough for the coefficient grammar)
// ---------------------------------------------------------------------------

ExprPtr time_derivative(const ExprPtr& e) {
  using K = Expr::Kind;
  const auto lit = [](double v) { return Expr::literal(v); };
  switch (e->kind()) {
    case K::Literal:
    case K::Param:
      return lit(0.0);
    case K::Time:
      return lit(1.0);
    case K::Neg:
      return Expr::neg(time_derivative(e->child()));
    case K::Add:
      return Expr::add(time_derivative(e->lhs()), time_derivative(e->rhs()));
    case K::Sub:
      return Expr::sub(time_derivative(e->lhs()), time_derivative(e->rhs()));
    case K::Mul:
      return Expr::add(Expr::mul(time_derivative(e->lhs()), e->rhs()),
                       Expr::mul(e->lhs(), time_derivative(e->rhs())));
    case K::Div:
      return Expr::div(
          Expr::sub(Expr::mul(time_derivative(e->lhs()), e->rhs()),
                    Expr::mul(e->lhs(), time_derivative(e->rhs()))),
          Expr::pow(e->rhs(), lit(2.0)));
    case K::Pow: {
      const ExprPtr& u = e->lhs();
      const ExprPtr& v = e->rhs();
      const ExprPtr du = time_derivative(u);
      const ExprPtr dv = time_derivative(v);
      if (dv->is_literal(0)) {
        // d/dt u^c = c u^(c-1) u'
        ExprPtr cm1 = v->kind() == K::Literal
                          ? lit(v->literal_value() - 1.0)
                          : Expr::sub(v, lit(1.0));
        return Expr::mul(Expr::mul(v, Expr::pow(u, cm1)), du);
      }
      // d/dt u^v = u^v (v' ln u + v u'/u)
      return Expr::mul(
          e, Expr::add(Expr::mul(dv, Expr::call(Builtin::Ln, u)),
                       Expr::mul(v, Expr::div(du, u))));
    }
    case K::Call: {
      const ExprPtr& u = e->child();
      const ExprPtr du = time_derivative(u);
      switch (e->builtin()) {
        case Builtin::Sin:
          return Expr::mul(Expr::call(Builtin::Cos, u), du);
        case Builtin::Cos:
          return Expr::neg(Expr::mul(Expr::call(Builtin::Sin, u), du));
        case Builtin::Tan:
          return Expr::mul(
              Expr::add(lit(1.0), Expr::pow(Expr::call(Builtin::Tan, u),
                                            lit(2.0))),
              du);
        case Builtin::Sinh:
          return Expr::mul(Expr::call(Builtin::Cosh, u), du);
        case Builtin::Cosh:
          return Expr::mul(Expr::call(Builtin::Sinh, u), du);
        case Builtin::Tanh:
          return Expr::mul(
              Expr::sub(lit(1.0), Expr::pow(Expr::call(Builtin::Tanh, u),
                                            lit(2.0))),
              du);
        case Builtin::Exp:
          return Expr::mul(e, du);
        case Builtin::Ln:
          return Expr::div(du, u);
        case Builtin::Sqrt:
          return Expr::div(du, Expr::mul(lit(2.0), e));
        case Builtin::Abs:
          return Expr::mul(Expr::call(Builtin::Sgn, u), du);
        case Builtin::Sgn:
          return lit(0.0);  // derivative 0 everywhere by convention
      }
      break;
    }
  }
  throw EvalError("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Pair synthesis
// ---------------------------------------------------------------------------

namespace {

void require_positive_a2(const LtvSystem& sys) {
  const auto ts =
      uniform_grid(sys.domain().lo, sys.domain().hi, kProbeGridSize);
  static const Params kEmpty;
  const ExprPtr a2b = bind_params(sys.a2(), sys.params());
  for (double t : ts) {
    const double v = eval_value(a2b, t, kEmpty);
    if (v <= 0.0) {
      std::ostringstream os;
      os << "a2 of system '" << sys.name() << "' must be positive for a "
         << "c1 != 0 pair; a2(" << t << ") = " << v;
      throw SystemError(os.str());
    }
  }
}

std::string pair_name(const LtvSystem& sys, const PairConstants& c) {
  std::ostringstream os;
  os << sys.name() << " pair(c2=" << c.c2 << ", c1=" << c.c1
     << ", c0=" << c.c0 << ")";
  return os.str();
}

}  // namespace

LtvSystem synthesize_pair(const LtvSystem& sys, const PairConstants& c) {
  if (c.c2 == 0.0) {
    if (c.c1 == 0.0 && c.c0 != 0.0)
      throw SystemError(
          "c2 = c1 = 0 is the degenerate scalar pair (constant gain 1/c0 = " +
          std::to_string(1.0 / c.c0) + "); it is not an LTV system");
    throw SystemError(
        "c2 = 0 rejected: the order of system B reduces to one");
  }
  if (c.c1 != 0.0) {
    if (c.c2 < 0.0)
      throw SystemError("c2 must be positive when c1 != 0 (sqrt(b2) must be "
                        "real)");
    require_positive_a2(sys);
    const CommutativityReport report = check_commutativity(sys);
    if (report.verdict == Verdict::DomainError)
      throw SystemError("constancy check failed on system '" + sys.name() +
                        "': " + report.error_message);
    if (report.verdict == Verdict::NotConstant) {
      std::ostringstream os;
      os << "system '" << sys.name() << "' has no c1 != 0 pair: A0 is not "
         << "constant (A0(" << report.witness_t_min
         << ") = " << report.a0_min << ", A0(" << report.witness_t_max
         << ") = " << report.a0_max << ")";
      throw SystemError(os.str());
    }
  }

  const auto lit = [](double v) { return Expr::literal(v); };
  const ExprPtr a2 = sys.a2();
  const ExprPtr a1 = sys.a1();
  const ExprPtr a0 = sys.a0();

  const ExprPtr b2 = Expr::mul(lit(c.c2), a2);
  ExprPtr b1 = Expr::mul(lit(c.c2), a1);
  ExprPtr b0 = Expr::mul(lit(c.c2), a0);
  if (c.c1 != 0.0) {
    const ExprPtr root = Expr::call(Builtin::Sqrt, a2);
    b1 = Expr::add(b1, Expr::mul(lit(c.c1), root));
    // f = (2 a1 - da2/dt) / (4 sqrt(a2))
    const ExprPtr f = Expr::div(
        Expr::sub(Expr::mul(lit(2.0), a1), time_derivative(a2)),
        Expr::mul(lit(4.0), root));
    b0 = Expr::add(b0, Expr::mul(lit(c.c1), f));
  }
  b0 = Expr::add(b0, lit(c.c0));

  return make_system(pair_name(sys, c), b2, b1, b0, std::nullopt,
                     sys.params(), sys.domain());
}

LtvSystem feedback_pair(const LtvSystem& sys, double c2, double c0) {
  if (c2 == 0.0)
    throw SystemError("c2 = 0 rejected: the order of system B reduces to one");
  return synthesize_pair(sys, PairConstants{c2, 0.0, c0});
}

std::pair<double, double> a0_of_pair_identity(const LtvSystem& sys,
                                              const PairConstants& c) {
  if (!(c.c2 > 0.0)) throw SystemError("closure identity requires c2 > 0");
  const LtvSystem b = synthesize_pair(sys, c);
  const CommutativityReport rb = check_commutativity(b);
  if (!rb.always())
    throw SystemError("synthesized pair unexpectedly fails the constancy "
                      "check: " + rb.error_message);
  const CommutativityReport ra = check_commutativity(sys);
  const double predicted =
      c.c2 * ra.constant() + c.c0 - c.c1 * c.c1 / (4.0 * c.c2);
  return {rb.constant(), predicted};
}

// ---------------------------------------------------------------------------
// Pair verification (recover constants from two systems)
// ---------------------------------------------------------------------------

namespace {

struct ConstFit {
  double value = 0.0;
  double spread = 0.0;
};

ConstFit fit_constant(const std::vector<double>& r) {
  double lo = r[0], hi = r[0], sum = 0.0;
  for (double v : r) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  return {sum / static_cast<double>(r.size()), hi - lo};
}

}  // namespace

std::optional<PairConstants> verify_pair(const LtvSystem& a,
                                         const LtvSystem& b, double tol,
                                         std::string* why) {
  const auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return std::nullopt;
  };
  const Domain da = a.domain();
  const Domain db = b.domain();
  const Domain common{std::max(da.lo, db.lo), std::min(da.hi, db.hi)};
  if (!(common.lo < common.hi)) return fail("domains do not overlap");
  const auto ts = uniform_grid(common.lo, common.hi, 101);

  try {
    std::vector<double> r2(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto ca = a.coeff_values(ts[i]);
      const auto cb = b.coeff_values(ts[i]);
      r2[i] = cb[0] / ca[0];
    }
    const ConstFit c2 = fit_constant(r2);
    if (c2.spread > tol * (1.0 + std::abs(c2.value)))
      return fail("b2/a2 is not constant");

    std::vector<double> r1(ts.size());
    double max_resid = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto ca = a.coeff_values(ts[i]);
      const auto cb = b.coeff_values(ts[i]);
      r1[i] = cb[1] - c2.value * ca[1];
      max_resid = std::max(max_resid, std::abs(r1[i]));
    }
    double c1_value = 0.0;
    if (max_resid > tol) {
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto ca = a.coeff_values(ts[i]);
        if (ca[0] <= 0.0) return fail("a2 not positive; cannot fit c1");
        r1[i] /= std::sqrt(ca[0]);
      }
      const ConstFit c1 = fit_constant(r1);
      if (c1.spread > tol * (1.0 + std::abs(c1.value)))
        return fail("(b1 - c2 a1)/sqrt(a2) is not constant");
      c1_value = c1.value;
    }

    std::vector<double> r0(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto ca = a.coeff_values(ts[i]);
      const auto cb = b.coeff_values(ts[i]);
      double v = cb[2] - c2.value * ca[2];
      if (c1_value != 0.0) v -= c1_value * f_of(a, ts[i]);
      r0[i] = v;
    }
    const ConstFit c0 = fit_constant(r0);
    if (c0.spread > tol * (1.0 + std::abs(c0.value)))
      return fail("b0 - c2 a0 - c1 f_A is not constant");

    if (std::abs(c1_value) > tol) {
      const CommutativityReport report = check_commutativity(a);
      if (!report.always())
        return fail("c1 != 0 but A0 of the first system is not constant");
    }
    return PairConstants{c2.value, c1_value, c0.value};
  } catch (const std::exception& ex) {
    return fail(std::string("evaluation failed: ") + ex.what());
  }
}

}  // namespace commutant
