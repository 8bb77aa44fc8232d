#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "commutant/catalog.hpp"
#include "commutant/channel.hpp"
#include "commutant/io.hpp"
#include "doctest.h"

using namespace commutant;

namespace {

void check_same_coefficients(const LtvSystem& x, const LtvSystem& y) {
  for (int i = 0; i <= 100; ++i) {
    const double t =
        x.domain().lo + (x.domain().hi - x.domain().lo) * i / 100.0;
    const auto cx = x.coeff_values(t);
    const auto cy = y.coeff_values(t);
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(cx[j] - cy[j]) <= 1e-12 * (1.0 + std::abs(cx[j])));
  }
}

}  // namespace

TEST_CASE("system file round-trip for the demo system") {
  const LtvSystem a = paper5_system_a();
  const std::string text = system_to_text(a);
  CHECK(text.rfind("# commutant-v1", 0) == 0);
  const LtvSystem back = parse_system_text(text);
  CHECK(back.name() == "paper5-A");
  CHECK(back.params().at("w0") == 1.0);
  check_same_coefficients(a, back);
}

TEST_CASE("synthesized pairs round-trip, sqrt expressions included") {
  const LtvSystem cheb = instantiate(*Catalog::standard().find("chebyshev"));
  const LtvSystem pair = synthesize_pair(cheb, {1.5, 0.5, 2.0});
  const LtvSystem back = parse_system_text(system_to_text(pair));
  check_same_coefficients(pair, back);

  for (const char* key : {"euler", "anger", "gegenbauer"}) {
    const CatalogEntry& e = *Catalog::standard().find(key);
    const std::optional<std::string> cond =
        e.expected_class == CommClass::Conditional
            ? std::optional<std::string>(e.conditions.front().label)
            : std::nullopt;
    const LtvSystem sys = instantiate(e, {}, std::nullopt, cond);
    const LtvSystem p = synthesize_pair(sys, {0.8, -0.4, 1.2});
    check_same_coefficients(p, parse_system_text(system_to_text(p)));
  }
}

TEST_CASE("every catalog entry round-trips through the file format") {
  for (const CatalogEntry& e : Catalog::standard().entries()) {
    const std::optional<std::string> cond =
        e.evaluable ? std::nullopt
                    : std::optional<std::string>(e.conditions.front().label);
    const LtvSystem sys = instantiate(e, {}, std::nullopt, cond);
    check_same_coefficients(sys, parse_system_text(system_to_text(sys)));
  }
}

TEST_CASE("file parse errors name the offending line") {
  const char* missing_a0 =
      "a2 = 1\n"
      "a1 = 0\n"
      "domain = 0, 1\n";
  try {
    parse_system_text(missing_a0, "f.sys");
    FAIL("expected IoError");
  } catch (const IoError& ex) {
    CHECK(std::string(ex.what()).find("missing key a0") != std::string::npos);
  }

  const char* duplicate =
      "a2 = 1\n"
      "a1 = 0\n"
      "a0 = 1\n"
      "a2 = 2\n"
      "domain = 0, 1\n";
  try {
    parse_system_text(duplicate, "f.sys");
    FAIL("expected IoError");
  } catch (const IoError& ex) {
    const std::string msg = ex.what();
    CHECK(msg.find("f.sys:4") != std::string::npos);
    CHECK(msg.find("duplicate key 'a2'") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_system_text("wibble = 3\n"), IoError);
  CHECK_THROWS_AS(parse_system_text("a2 = 1\na1 = 0\na0 = 1\ndomain = 0\n"),
                  IoError);
  CHECK_THROWS_AS(
      parse_system_text("a2 = 1\na1 = 0\na0 = 1\nparam n = 1\n"
                        "param n = 2\ndomain = 0, 1\n"),
      IoError);
  CHECK_THROWS_AS(parse_system_text("a2 =\na1 = 0\na0 = 1\ndomain = 0, 1\n"),
                  IoError);
  CHECK_THROWS_AS(load_system("/no/such/file.sys"), IoError);
}

TEST_CASE("rationals and comments are accepted in files") {
  const char* text =
      "# commutant-v1\n"
      "# demo system B constant uses an exact rational\n"
      "name = rational\n"
      "a2 = 1\n"
      "a1 = 0\n"
      "a0 = k*t\n"
      "param k = 337/32\n"
      "\n"
      "domain = -1/2, 3/2\n";
  const LtvSystem sys = parse_system_text(text);
  CHECK(sys.params().at("k") == doctest::Approx(10.53125));
  CHECK(sys.domain().lo == doctest::Approx(-0.5));
  CHECK(sys.domain().hi == doctest::Approx(1.5));
}

TEST_CASE("save_system writes loadable files") {
  const auto path =
      std::filesystem::temp_directory_path() / "commutant_io_test.sys";
  const LtvSystem b = paper5_system_b();
  save_system(b, path);
  const LtvSystem back = load_system(path);
  check_same_coefficients(b, back);
  std::filesystem::remove(path);
}

TEST_CASE("trajectory CSV format") {
  const LtvSystem sys = make_system("s", "1", "0", "1", std::nullopt, {},
                                    {0.0, 1.0});
  const Trajectory traj =
      integrate(sys, InputSignal::zero(), {1.0, 0.0}, 0.0, 1.0, 0.5);
  const std::string csv = trajectory_to_csv(traj);
  CHECK(csv.rfind("t,input,y1,dy1\n", 0) == 0);
  CHECK(csv.find("\r") == std::string::npos);           // LF only
  CHECK(csv.find(",\n") == std::string::npos);          // no trailing comma
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4); // header + 3 rows
  CHECK(csv.back() == '\n');

  Trajectory empty;
  empty.names = {"input", "y1"};
  empty.columns = {{}, {}};
  CHECK(trajectory_to_csv(empty) == "t,input,y1\n");
}

TEST_CASE("trajectory values print with 15 significant digits") {
  Trajectory traj;
  traj.t0 = 0.0;
  traj.dt = 1.0;
  traj.names = {"y1"};
  traj.columns = {{1.0 / 3.0}};
  CHECK(trajectory_to_csv(traj) == "t,y1\n0,0.333333333333333\n");
}
