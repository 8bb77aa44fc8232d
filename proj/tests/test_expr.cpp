#include <cmath>
#include <random>

#include "commutant/expr.hpp"
#include "doctest.h"

using namespace commutant;

namespace {

double fd1(const ExprPtr& e, double t, double h, const Params& p = {}) {
  return (eval_value(e, t + h, p) - eval_value(e, t - h, p)) / (2.0 * h);
}

double fd2(const ExprPtr& e, double t, double h, const Params& p = {}) {
  return (eval_value(e, t + h, p) - 2.0 * eval_value(e, t, p) +
          eval_value(e, t - h, p)) /
         (h * h);
}

}  // namespace

TEST_CASE("parsing basics") {
  CHECK(eval_value(parse_expr("t^2"), 3.0, {}) == doctest::Approx(9.0));
  CHECK_NOTHROW(parse_expr("2 + 2*sin(w0*t)"));
  CHECK(eval_value(parse_expr("2 + 2*sin(w0*t)"), 0.7, {{"w0", 1.0}}) ==
        doctest::Approx(2.0 + 2.0 * std::sin(0.7)));

  // x is an accepted alias for t
  CHECK(eval_value(parse_expr("x^2 - x"), 3.0, {}) == doctest::Approx(6.0));

  // precedence: ^ binds tighter than unary minus, right-associative
  CHECK(eval_value(parse_expr("-2^2"), 0.0, {}) == doctest::Approx(-4.0));
  CHECK(eval_value(parse_expr("2^3^2"), 0.0, {}) == doctest::Approx(512.0));
  CHECK(eval_value(parse_expr("2^-2"), 0.0, {}) == doctest::Approx(0.25));
  CHECK(eval_value(parse_expr("6/3/2"), 0.0, {}) == doctest::Approx(1.0));
}

TEST_CASE("parse errors carry offsets") {
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("   "), ParseError);

  try {
    parse_expr("2 sin(t)");  // implicit multiplication is not supported
    FAIL("expected ParseError");
  } catch (const ParseError& ex) {
    CHECK(ex.offset() == 2);
    CHECK(std::string(ex.what()).find("implicit multiplication") !=
          std::string::npos);
  }

  CHECK_THROWS_AS(parse_expr("foo(t)"), ParseError);   // unknown function
  CHECK_THROWS_AS(parse_expr("(1 + t"), ParseError);
  CHECK_THROWS_AS(parse_expr("1 +"), ParseError);
  CHECK_THROWS_AS(parse_expr("sin t"), ParseError);    // sin is not a param
}

TEST_CASE("unresolved identifiers fail at evaluation, not parse") {
  const ExprPtr e = parse_expr("q*t + r");
  CHECK_THROWS_AS(eval_value(e, 1.0, {{"q", 1.0}}), EvalError);
  CHECK(eval_value(e, 2.0, {{"q", 3.0}, {"r", 1.0}}) == doctest::Approx(7.0));
}

TEST_CASE("eval_jet examples") {
  const Jet2 s = eval_jet(parse_expr("sin(t)"), 0.0, {});
  CHECK(s.v == doctest::Approx(0.0));
  CHECK(s.d1 == doctest::Approx(1.0));
  CHECK(s.d2 == doctest::Approx(0.0));

  const Jet2 p = eval_jet(parse_expr("t^2 - 4"), 3.0, {});
  CHECK(p.v == doctest::Approx(5.0));
  CHECK(p.d1 == doctest::Approx(6.0));
  CHECK(p.d2 == doctest::Approx(2.0));

  const ExprPtr a1 = parse_expr("2 + 2*sin(w0*t)");
  const Params w{{"w0", 1.0}};
  const Jet2 j = eval_jet(a1, 0.7, w);
  CHECK(std::abs(j.d1 - fd1(a1, 0.7, 1e-5, w)) <= 1e-8);
}

TEST_CASE("sgn and abs derivative conventions") {
  Jet2 j = eval_jet(parse_expr("sgn(t)"), 0.0, {});
  CHECK(j.v == 0.0);
  CHECK(j.d1 == 0.0);
  CHECK(j.d2 == 0.0);
  j = eval_jet(parse_expr("sgn(t)"), 2.0, {});
  CHECK(j.v == 1.0);
  CHECK(j.d1 == 0.0);
  j = eval_jet(parse_expr("abs(t)"), -3.0, {});
  CHECK(j.v == 3.0);
  CHECK(j.d1 == -1.0);
  CHECK(j.d2 == 0.0);
  j = eval_jet(parse_expr("abs(t)"), 0.0, {});
  CHECK(j.d1 == 0.0);
  CHECK(j.d2 == 0.0);
}

TEST_CASE("domain violations") {
  CHECK_THROWS_AS(eval_value(parse_expr("sqrt(t)"), -1.0, {}), EvalError);
  CHECK_THROWS_AS(eval_value(parse_expr("ln(t)"), -1.0, {}), EvalError);
  CHECK_THROWS_AS(eval_value(parse_expr("ln(t)"), 0.0, {}), EvalError);
  CHECK_THROWS_AS(eval_value(parse_expr("1/t"), 0.0, {}), EvalError);
  CHECK_THROWS_AS(eval_value(parse_expr("t^-1"), 0.0, {}), EvalError);
  CHECK_THROWS_AS(eval_value(parse_expr("t^0.5"), -2.0, {}), EvalError);
  CHECK_THROWS_AS(eval_jet(parse_expr("exp(t^2)"), 50.0, {}), EvalError);

  // integer exponents are fine on negative bases
  CHECK(eval_value(parse_expr("t^2"), -3.0, {}) == doctest::Approx(9.0));
  CHECK(eval_value(parse_expr("t^3"), -2.0, {}) == doctest::Approx(-8.0));
}

TEST_CASE("power rule jets") {
  Jet2 j = eval_jet(parse_expr("t^3"), 2.0, {});
  CHECK(j.v == doctest::Approx(8.0));
  CHECK(j.d1 == doctest::Approx(12.0));
  CHECK(j.d2 == doctest::Approx(12.0));

  // constant but non-literal exponent (the catalog's t^(2n))
  const ExprPtr e = parse_expr("t^(2*n)");
  j = eval_jet(e, 1.5, {{"n", 1.5}});  // t^3
  CHECK(j.v == doctest::Approx(std::pow(1.5, 3)));
  CHECK(j.d1 == doctest::Approx(3.0 * std::pow(1.5, 2)));
  CHECK(eval_value(e, -2.0, {{"n", 1.0}}) == doctest::Approx(4.0));
  CHECK(eval_value(e, -2.0, {{"n", 0.0}}) == doctest::Approx(1.0));

  // genuinely varying exponent: t^t = exp(t ln t)
  const ExprPtr tt = parse_expr("t^t");
  j = eval_jet(tt, 2.0, {});
  CHECK(j.v == doctest::Approx(4.0));
  CHECK(j.d1 == doctest::Approx(4.0 * (std::log(2.0) + 1.0)));
  CHECK(std::abs(j.d2 - fd2(tt, 2.0, 1e-4)) <= 1e-4 * (1.0 + std::abs(j.d2)));
  // the value exists at t = -1 (integer exponent there) but the jet needs ln
  CHECK(eval_value(tt, -1.0, {}) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(eval_jet(tt, -1.0, {}), EvalError);
  CHECK_THROWS_AS(eval_value(tt, -0.5, {}), EvalError);
}

TEST_CASE("jets match finite differences for every builtin") {
  // f(0.5 t + 2) with t in [0.1, 2.5] keeps all builtins away from their
  // singularities (arg in [2.05, 3.25]).
  const char* builtins[] = {"sin",  "cos",  "tan", "sinh", "cosh", "tanh",
                            "exp",  "ln",   "sqrt", "abs",  "sgn"};
  std::mt19937 rng(20240817u);
  std::uniform_real_distribution<double> pick_t(0.1, 2.5);
  for (const char* fn : builtins) {
    const ExprPtr e =
        parse_expr("(t^2 + 1)*" + std::string(fn) + "(0.5*t + 2) + t/3");
    for (int i = 0; i < 40; ++i) {
      const double t = pick_t(rng);
      const Jet2 j = eval_jet(e, t, {});
      const double d1 = fd1(e, t, 1e-5);
      const double d2 = fd2(e, t, 1e-4);
      CHECK(std::abs(j.d1 - d1) <= 1e-6 * (1.0 + std::abs(j.d1)));
      CHECK(std::abs(j.d2 - d2) <= 1e-4 * (1.0 + std::abs(j.d2)));
    }
  }
}

namespace {

// Random trees over singularity-free operations.
ExprPtr random_tree(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
  std::uniform_real_distribution<double> lit(-2.0, 2.0);
  switch (pick(rng)) {
    case 0: return Expr::literal(lit(rng));
    case 1: return Expr::time_var();
    case 2: return Expr::param(rng() % 2 ? "p" : "q");
    case 3: return Expr::add(random_tree(rng, depth - 1),
                             random_tree(rng, depth - 1));
    case 4: return Expr::sub(random_tree(rng, depth - 1),
                             random_tree(rng, depth - 1));
    case 5: return Expr::mul(random_tree(rng, depth - 1),
                             random_tree(rng, depth - 1));
    case 6: return Expr::neg(random_tree(rng, depth - 1));
    default: {
      const Builtin fns[] = {Builtin::Sin, Builtin::Cos, Builtin::Tanh,
                             Builtin::Abs, Builtin::Sgn};
      return Expr::call(fns[rng() % 5], random_tree(rng, depth - 1));
    }
  }
}

}  // namespace

TEST_CASE("print/parse round-trip evaluates identically") {
  std::mt19937 rng(7u);
  const Params params{{"p", 0.37}, {"q", -1.25}};
  for (int trial = 0; trial < 60; ++trial) {
    const ExprPtr e = random_tree(rng, 4);
    const ExprPtr back = parse_expr(to_string(e));
    for (int i = 0; i < 100; ++i) {
      const double t = -3.0 + 6.0 * i / 99.0;
      const double a = eval_value(e, t, params);
      const double b = eval_value(back, t, params);
      CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
    }
  }

  // a few forms with division, powers, and sqrt on a safe domain
  for (const char* text :
       {"(t - d1)*(t - d2)", "1 - v^2/t^2", "t - (d1 + d2)/2",
        "sqrt(1 - t^2)", "337/32 - t^2/4", "-(1/(pi*t^2))*(t + v)",
        "t^(2*n)", "2^-2 + t"}) {
    const ExprPtr e = parse_expr(text);
    const ExprPtr back = parse_expr(to_string(e));
    const Params p{{"d1", -1.0}, {"d2", -2.0}, {"v", 0.3},
                   {"pi", 3.141592653589793}, {"n", 2.0}};
    for (int i = 0; i < 100; ++i) {
      const double t = 0.5 + 0.004 * i;  // stays inside (0, 1) shifted
      const double a = eval_value(e, t, p);
      const double b = eval_value(back, t, p);
      CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
    }
  }
}

TEST_CASE("sum and product rules hold componentwise") {
  std::mt19937 rng(11u);
  const Params params{{"p", 1.5}, {"q", 0.25}};
  for (int trial = 0; trial < 40; ++trial) {
    const ExprPtr e1 = random_tree(rng, 3);
    const ExprPtr e2 = random_tree(rng, 3);
    const double t = -2.0 + 4.0 * trial / 39.0;
    const Jet2 j1 = eval_jet(e1, t, params);
    const Jet2 j2 = eval_jet(e2, t, params);

    const Jet2 sum = eval_jet(Expr::add(e1, e2), t, params);
    const Jet2 manual_sum = j1 + j2;
    CHECK(std::abs(sum.v - manual_sum.v) <= 1e-15 * (1.0 + std::abs(sum.v)));
    CHECK(std::abs(sum.d1 - manual_sum.d1) <=
          1e-15 * (1.0 + std::abs(sum.d1)));
    CHECK(std::abs(sum.d2 - manual_sum.d2) <=
          1e-15 * (1.0 + std::abs(sum.d2)));

    const Jet2 prod = eval_jet(Expr::mul(e1, e2), t, params);
    const Jet2 manual_prod = j1 * j2;
    CHECK(std::abs(prod.v - manual_prod.v) <=
          1e-15 * (1.0 + std::abs(prod.v)));
    CHECK(std::abs(prod.d1 - manual_prod.d1) <=
          1e-15 * (1.0 + std::abs(prod.d1)));
    CHECK(std::abs(prod.d2 - manual_prod.d2) <=
          1e-15 * (1.0 + std::abs(prod.d2)));
  }
}

TEST_CASE("parse_real accepts constant expressions only") {
  CHECK(parse_real("337/32") == doctest::Approx(10.53125));
  CHECK(parse_real("-1/4") == doctest::Approx(-0.25));
  CHECK(parse_real("1e-3") == doctest::Approx(0.001));
  CHECK_THROWS_AS(parse_real("t + 1"), EvalError);
  CHECK_THROWS_AS(parse_real("w0"), EvalError);
  CHECK_THROWS_AS(parse_real("1 +"), ParseError);
}

TEST_CASE("bind_params substitutes and folds") {
  const ExprPtr e = parse_expr("2 + 2*sin(w0*t)");
  CHECK(free_params(e) == std::set<std::string>{"w0"});
  const ExprPtr bound = bind_params(e, {{"w0", 1.0}});
  CHECK(free_params(bound).empty());
  CHECK(eval_value(bound, 0.25, {}) ==
        doctest::Approx(2.0 + 2.0 * std::sin(0.25)));
}
