#include <cmath>
#include <numbers>
#include <random>

#include "commutant/catalog.hpp"
#include "commutant/channel.hpp"
#include "commutant/commutativity.hpp"
#include "doctest.h"

using namespace commutant;

namespace {

const LtvSystem& bessel() {
  static const LtvSystem sys = instantiate(*Catalog::standard().find("bessel"));
  return sys;
}

const LtvSystem& chebyshev() {
  static const LtvSystem sys =
      instantiate(*Catalog::standard().find("chebyshev"));
  return sys;
}

}  // namespace

TEST_CASE("f_of examples") {
  const LtvSystem a = paper5_system_a();
  CHECK(f_of(a, std::numbers::pi / 2) == doctest::Approx(2.0).epsilon(1e-14));
  // Bessel and Chebyshev both have 2 a1 = da2/dt, so f vanishes exactly.
  CHECK(f_of(bessel(), 3.3) == 0.0);
  CHECK(f_of(chebyshev(), 0.4) == 0.0);
  CHECK(f_of(chebyshev(), -0.7) == 0.0);
}

TEST_CASE("a0_bracket examples") {
  CHECK(a0_bracket(chebyshev(), 0.33) == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(a0_bracket(bessel(), 3.0) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(a0_bracket(bessel(), 1.0) == doctest::Approx(-3.0).epsilon(1e-12));

  const LtvSystem a = paper5_system_a();
  for (double t : {0.0, 0.3, 1.7, 6.4, 19.5})
    CHECK(a0_bracket(a, t) == doctest::Approx(3.5).epsilon(1e-12));
}

TEST_CASE("a0_alt agrees and matches hand algebra") {
  const LtvSystem euler = instantiate(*Catalog::standard().find("euler"));
  // alpha = 3, beta = 7: A0 = beta - (alpha - 1)^2/4 = 6 at every t
  for (double t : {0.6, 1.0, 4.4, 9.9}) {
    CHECK(a0_alt(euler, t) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(a0_bracket(euler, t) == doctest::Approx(6.0).epsilon(1e-12));
  }
  const LtvSystem a = paper5_system_a();
  for (double t : {0.1, 2.2, 13.7})
    CHECK(a0_alt(a, t) == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(a0_alt(chebyshev(), 0.5) == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("two-form identity on a sample of systems") {
  for (const char* key : {"bessel", "laguerre", "gegenbauer", "euler"}) {
    const LtvSystem sys = instantiate(*Catalog::standard().find(key));
    for (double frac : {0.0, 0.21, 0.5, 0.83, 1.0}) {
      const double t =
          sys.domain().lo + frac * (sys.domain().hi - sys.domain().lo);
      const double lhs = a0_bracket(sys, t);
      const double rhs = a0_alt(sys, t);
      CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST_CASE("check_commutativity verdicts") {
  const CommutativityReport b = check_commutativity(bessel());
  CHECK(b.verdict == Verdict::NotConstant);
  CHECK(b.witness_t_min == doctest::Approx(0.5));
  CHECK(b.witness_t_max == doctest::Approx(10.0));
  CHECK(b.a0_min == doctest::Approx(0.25 - 4.0));   // t^2 - n^2 at t = 0.5
  CHECK(b.a0_max == doctest::Approx(100.0 - 4.0));

  const CommutativityReport c = check_commutativity(chebyshev());
  CHECK(c.verdict == Verdict::Always);
  CHECK(c.constant() == doctest::Approx(9.0));

  const CatalogEntry& anger = *Catalog::standard().find("anger");
  const CommutativityReport half =
      check_commutativity(instantiate(anger, {{"v", 0.5}}));
  CHECK(half.verdict == Verdict::Always);
  CHECK(half.constant() == doctest::Approx(1.0).epsilon(1e-12));
  const CommutativityReport generic = check_commutativity(instantiate(anger));
  CHECK(generic.verdict == Verdict::NotConstant);
}

TEST_CASE("check_commutativity reports domain errors") {
  // sqrt(t - 2) fails over part of the domain
  const LtvSystem sys = make_system("partial", "1", "sqrt(t - 2)", "1",
                                    std::nullopt, {}, {0.0, 5.0});
  const CommutativityReport rep = check_commutativity(sys);
  CHECK(rep.verdict == Verdict::DomainError);
  CHECK(!rep.error_message.empty());
}

TEST_CASE("synthesize_pair reproduces the transmission-demo pair") {
  const LtvSystem a = paper5_system_a();
  const LtvSystem b = synthesize_pair(a, {0.5, -0.25, 337.0 / 32.0});
  for (int i = 0; i <= 1000; ++i) {
    const double t = 20.0 * i / 1000.0;
    const auto cb = b.coeff_values(t);
    CHECK(std::abs(cb[0] - 0.5) <= 1e-12);
    CHECK(std::abs(cb[1] - (0.75 + std::sin(t))) <= 1e-12);
  }
}

TEST_CASE("synthesize_pair identity constants reproduce the system") {
  for (const char* key : {"chebyshev", "euler", "bessel"}) {
    const LtvSystem sys = instantiate(*Catalog::standard().find(key));
    const LtvSystem same = synthesize_pair(sys, {1.0, 0.0, 0.0});
    for (int i = 0; i <= 100; ++i) {
      const double t =
          sys.domain().lo + (sys.domain().hi - sys.domain().lo) * i / 100.0;
      const auto x = sys.coeff_values(t);
      const auto y = same.coeff_values(t);
      for (int j = 0; j < 3; ++j)
        CHECK(std::abs(x[j] - y[j]) <= 1e-12 * (1.0 + std::abs(x[j])));
    }
  }
}

TEST_CASE("synthesize_pair rejections") {
  try {
    synthesize_pair(chebyshev(), {0.0, 1.0, 0.0});
    FAIL("expected SystemError");
  } catch (const SystemError& ex) {
    CHECK(std::string(ex.what()).find("order of system B reduces to one") !=
          std::string::npos);
  }

  try {
    synthesize_pair(bessel(), {1.0, 0.5, 0.0});  // c1 != 0 on a Never system
    FAIL("expected SystemError");
  } catch (const SystemError& ex) {
    CHECK(std::string(ex.what()).find("not") != std::string::npos);
  }

  CHECK_THROWS_AS(synthesize_pair(chebyshev(), {-1.0, 0.5, 0.0}),
                  SystemError);  // c2 < 0 with c1 != 0

  try {
    synthesize_pair(chebyshev(), {0.0, 0.0, 4.0});
    FAIL("expected SystemError");
  } catch (const SystemError& ex) {
    CHECK(std::string(ex.what()).find("scalar") != std::string::npos);
  }
}

TEST_CASE("feedback_pair works without any constancy condition") {
  const LtvSystem fb = feedback_pair(bessel(), 2.0, 1.0);
  for (double t : {0.5, 1.0, 4.2, 10.0}) {
    const auto c = fb.coeff_values(t);
    CHECK(c[0] == doctest::Approx(2.0 * t * t).epsilon(1e-14));
    CHECK(c[1] == doctest::Approx(2.0 * t).epsilon(1e-14));
    CHECK(c[2] == doctest::Approx(2.0 * (t * t - 4.0) + 1.0).epsilon(1e-14));
  }

  // identity feedback
  const LtvSystem id = feedback_pair(bessel(), 1.0, 0.0);
  const auto c = id.coeff_values(2.0);
  CHECK(c[2] == doctest::Approx(0.0).epsilon(1e-15));

  // negative c2 is fine when c1 = 0
  CHECK_NOTHROW(feedback_pair(bessel(), -2.0, 1.0));
  CHECK_THROWS_AS(feedback_pair(bessel(), 0.0, 1.0), SystemError);

  // Laguerre is in the Never class yet has feedback pairs
  const LtvSystem lag = instantiate(*Catalog::standard().find("laguerre"));
  CHECK_NOTHROW(feedback_pair(lag, 3.0, -2.0));
}

TEST_CASE("a0_of_pair_identity") {
  const LtvSystem cheb2 =
      instantiate(*Catalog::standard().find("chebyshev"), {{"n", 2.0}});
  auto [actual, predicted] = a0_of_pair_identity(cheb2, {1.0, 2.0, 3.0});
  CHECK(actual == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(predicted == doctest::Approx(6.0).epsilon(1e-12));

  auto [same_a, same_b] = a0_of_pair_identity(cheb2, {1.0, 0.0, 0.0});
  CHECK(same_a == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(same_b == doctest::Approx(4.0).epsilon(1e-9));

  const LtvSystem a = paper5_system_a();
  auto [b_const, b_pred] =
      a0_of_pair_identity(a, {0.5, -0.25, 337.0 / 32.0});
  CHECK(b_const == doctest::Approx(12.25).epsilon(1e-9));
  CHECK(b_pred == doctest::Approx(12.25).epsilon(1e-12));
}

TEST_CASE("closure property under random constants") {
  std::mt19937 rng(99u);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const LtvSystem systems[] = {
      chebyshev(), instantiate(*Catalog::standard().find("euler")),
      instantiate(*Catalog::standard().find("anger"), {}, std::nullopt,
                  std::string("v = 0.5"))};
  for (const LtvSystem& sys : systems) {
    const double base = check_commutativity(sys).constant();
    for (int trial = 0; trial < 10; ++trial) {
      PairConstants c;
      c.c2 = 2.0 - 2.0 * unit(rng);
      c.c1 = -2.0 + 4.0 * unit(rng);
      c.c0 = -2.0 + 4.0 * unit(rng);
      const LtvSystem b = synthesize_pair(sys, c);
      const CommutativityReport rep = check_commutativity(b);
      REQUIRE(rep.verdict == Verdict::Always);
      const double predicted =
          c.c2 * base + c.c0 - c.c1 * c.c1 / (4.0 * c.c2);
      CHECK(std::abs(rep.constant() - predicted) <=
            1e-9 * (1.0 + std::abs(predicted)));
    }
  }
}

TEST_CASE("verify_pair recovers constants") {
  const LtvSystem a = paper5_system_a();
  const LtvSystem b = paper5_system_b();
  std::string why;
  const auto c = verify_pair(a, b, 1e-6, &why);
  REQUIRE(c.has_value());
  CHECK(c->c2 == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(c->c1 == doctest::Approx(-0.25).epsilon(1e-9));
  CHECK(c->c0 == doctest::Approx(337.0 / 32.0).epsilon(1e-9));

  const auto fb = verify_pair(bessel(), feedback_pair(bessel(), 2.0, 1.0));
  REQUIRE(fb.has_value());
  CHECK(fb->c2 == doctest::Approx(2.0));
  CHECK(fb->c1 == doctest::Approx(0.0));
  CHECK(fb->c0 == doctest::Approx(1.0));

  CHECK(!verify_pair(a, bessel(), 1e-6, &why).has_value());
}

TEST_CASE("time_derivative agrees with jets") {
  for (const char* text :
       {"2 + 2*sin(w0*t)", "t^2 - n^2", "(t - d1)*(t - d2)",
        "exp(t)/(1 + exp(t))^2", "sqrt(1 - t^2)", "tanh(t)*t^3",
        "abs(t)", "1/t"}) {
    const ExprPtr e = parse_expr(text);
    const ExprPtr de = time_derivative(e);
    const Params p{{"w0", 1.0}, {"n", 2.0}, {"d1", -1.0}, {"d2", -2.0}};
    for (double t : {0.31, 0.62, 0.9}) {
      const Jet2 j = eval_jet(e, t, p);
      const double d = eval_value(de, t, p);
      CHECK(std::abs(d - j.d1) <= 1e-12 * (1.0 + std::abs(j.d1)));
    }
  }
}
