#include <algorithm>
#include <cmath>
#include <set>

#include "commutant/catalog.hpp"
#include "doctest.h"

using namespace commutant;

namespace {

const Catalog& cat() { return Catalog::standard(); }

// Table 1 keys in line order.
const char* kKeys[30] = {
    "airy",           "anger",
    "baer",           "bessel",
    "bessel-modified", "bessel-spherical",
    "bessel-modified-spherical", "bessel-wave",
    "chebyshev",      "eckart",
    "ellipsoidal",    "erfc",
    "euler",          "gegenbauer",
    "hill",           "hypergeometric",
    "jacobi-first",   "jacobi-second",
    "laguerre",       "magnetic-pole",
    "morse-rosen",    "neumann",
    "parabolic-cylinder", "riccati",
    "richardson",     "struve",
    "symmetric-top",  "titchmarsh",
    "weber-first",    "weber-second"};

}  // namespace

TEST_CASE("catalog has the 30 entries in Table 1 order") {
  REQUIRE(cat().entries().size() == 30);
  for (int i = 0; i < 30; ++i) {
    const CatalogEntry& e = cat().entries()[static_cast<std::size_t>(i)];
    CHECK(e.id == i + 1);
    CHECK(e.key == kKeys[i]);
    CHECK(cat().find(e.key) == &e);
    CHECK(cat().find(std::to_string(e.id)) == &e);
  }
  CHECK(cat().find("no-such-equation") == nullptr);
}

TEST_CASE("expected classes reproduce the Table 2 partition") {
  const std::set<int> never = {3, 4, 5, 6, 7, 12, 19, 20, 22, 24, 26};
  const std::set<int> always = {9, 13};
  int n_never = 0, n_cond = 0, n_always = 0;
  for (const CatalogEntry& e : cat().entries()) {
    switch (e.expected_class) {
      case CommClass::Never:
        ++n_never;
        CHECK(never.count(e.id) == 1);
        break;
      case CommClass::Always:
        ++n_always;
        CHECK(always.count(e.id) == 1);
        break;
      case CommClass::Conditional:
        ++n_cond;
        CHECK(never.count(e.id) == 0);
        CHECK(always.count(e.id) == 0);
        break;
    }
  }
  CHECK(n_never == 11);
  CHECK(n_cond == 17);
  CHECK(n_always == 2);
}

TEST_CASE("condition metadata invariants") {
  for (const CatalogEntry& e : cat().entries()) {
    if (e.expected_class == CommClass::Conditional)
      CHECK(!e.conditions.empty());
    if (e.expected_class == CommClass::Always) {
      REQUIRE(e.conditions.size() == 1);
      CHECK(e.conditions[0].label == "no condition");
    }
    // Table 4 rows correspond to conditions by label.
    for (const Table4Row& r : e.table4)
      CHECK(find_condition(e, r.label) != nullptr);
  }
  // Exactly 20 equations appear in Table 4.
  const long in_t4 = std::count_if(
      cat().entries().begin(), cat().entries().end(),
      [](const CatalogEntry& e) { return e.in_table4(); });
  CHECK(in_t4 == 20);
}

TEST_CASE("instantiate defaults and overrides") {
  const LtvSystem cheb = instantiate(*cat().find("chebyshev"));
  CHECK(cheb.domain().lo == doctest::Approx(-0.9));
  CHECK(cheb.domain().hi == doctest::Approx(0.9));
  CHECK(cheb.params().at("n") == 3.0);

  const LtvSystem cheb5 = instantiate(*cat().find("chebyshev"), {{"n", 5.0}});
  CHECK(cheb5.coeff_values(0.0)[2] == doctest::Approx(25.0));

  CHECK_THROWS_AS(instantiate(*cat().find("chebyshev"), {{"zz", 1.0}}),
                  SystemError);
}

TEST_CASE("instantiate with a condition substitutes the final form") {
  const LtvSystem geg = instantiate(*cat().find("gegenbauer"), {},
                                    std::nullopt, std::string("mu = -0.5"));
  // (1 - x^2) y'' - x y' + (v + 0.5)^2 y = 0 with default v = 0.7
  for (double t : {-0.8, 0.0, 0.6}) {
    const auto c = geg.coeff_values(t);
    CHECK(c[0] == doctest::Approx(1.0 - t * t));
    CHECK(c[1] == doctest::Approx(-t));
    CHECK(c[2] == doctest::Approx(1.44));
  }

  // roman-numeral and squeezed-label lookups
  CHECK_NOTHROW(instantiate(*cat().find("gegenbauer"), {}, std::nullopt,
                            std::string("ii")));
  CHECK_NOTHROW(instantiate(*cat().find("anger"), {}, std::nullopt,
                            std::string("v=0.5")));
  CHECK_THROWS_AS(instantiate(*cat().find("anger"), {}, std::nullopt,
                              std::string("v = 0.7")),
                  SystemError);
}

TEST_CASE("the ellipsoidal general form is metadata-only") {
  try {
    instantiate(*cat().find("ellipsoidal"));
    FAIL("expected SystemError");
  } catch (const SystemError& ex) {
    CHECK(std::string(ex.what()).find("sn") != std::string::npos);
  }
  const LtvSystem reduced = instantiate(*cat().find("ellipsoidal"), {},
                                        std::nullopt, std::string("k = 0"));
  CHECK(reduced.coeff_values(1.0)[2] == doctest::Approx(-1.0));
  CHECK(check_commutativity(reduced).verdict == Verdict::Always);
}

TEST_CASE("classify matches Table 2 with the Baer exception") {
  const Classification b = classify(cat().at(4));
  CHECK(b.computed == CommClass::Never);
  CHECK(b.agrees);

  const Classification c = classify(cat().at(9));
  CHECK(c.computed == CommClass::Always);
  CHECK(c.agrees);

  const Classification baer = classify(*cat().find("baer"));
  CHECK(baer.computed == CommClass::Conditional);
  CHECK(baer.expected == CommClass::Never);
  CHECK(!baer.agrees);

  const Classification ell = classify(*cat().find("ellipsoidal"));
  CHECK(ell.metadata_only);
  CHECK(!ell.computed.has_value());
}

TEST_CASE("verdicts are stable under grid refinement") {
  for (const CatalogEntry& e : cat().entries()) {
    if (!e.evaluable) continue;
    const Classification coarse = classify(e, 101);
    const Classification fine = classify(e, 10001);
    CHECK(*coarse.computed == *fine.computed);
  }
}

TEST_CASE("table4_conjugate_of closed forms") {
  // Euler: b0 = c2 beta + c1 (alpha - 1)/2 + c0 with alpha = 3, beta = 7
  const PairConstants c{1.5, 0.8, -0.3};
  const LtvSystem euler = table4_conjugate_of(*cat().find("euler"),
                                              std::nullopt, c);
  for (double t : {0.5, 2.0, 9.0}) {
    const auto v = euler.coeff_values(t);
    CHECK(v[0] == doctest::Approx(1.5 * t * t));
    CHECK(v[1] == doctest::Approx((1.5 * 3.0 + 0.8) * t));
    CHECK(v[2] == doctest::Approx(1.5 * 7.0 + 0.8 * 1.0 + (-0.3)));
  }

  const LtvSystem cheb = table4_conjugate_of(*cat().find("chebyshev"),
                                             std::nullopt, c);
  CHECK(cheb.coeff_values(0.0)[2] == doctest::Approx(-0.3 + 1.5 * 9.0));

  const LtvSystem weber = table4_conjugate_of(*cat().find("weber-first"),
                                              std::nullopt, c);
  CHECK(weber.coeff_values(0.0)[2] == doctest::Approx(1.5 * 1.0 - 0.3));

  CHECK_THROWS_AS(
      table4_conjugate_of(*cat().find("bessel"), std::nullopt, c),
      SystemError);
}

TEST_CASE("verify_tables finds exactly the documented errata") {
  const VerifyReport rep = verify_tables(cat());
  CHECK(rep.ok());
  CHECK(rep.checks_run > 150);

  int documented = 0;
  bool baer_seen = false, symtop_seen = false;
  for (const VerifyIssue& i : rep.issues) {
    CHECK(i.documented);
    ++documented;
    baer_seen |= (i.key == "baer" && i.table == "table2");
    symtop_seen |= (i.key == "symmetric-top" && i.table == "table4");
  }
  CHECK(documented >= 2);
  CHECK(baer_seen);
  CHECK(symtop_seen);
  CHECK(!rep.notes.empty());
  CHECK(rep.to_text().find("verdict: OK") != std::string::npos);
}

TEST_CASE("verify_tables flags a corrupted catalog") {
  Catalog corrupted = cat();
  for (CatalogEntry& e : corrupted.entries_) {
    if (e.key == "chebyshev") e.table4[0].b0 = "c0 + c2*n^2 + 1";
  }
  const VerifyReport rep = verify_tables(corrupted);
  CHECK(!rep.ok());
  const bool found = std::any_of(
      rep.issues.begin(), rep.issues.end(), [](const VerifyIssue& i) {
        return !i.documented && i.key == "chebyshev" && i.table == "table4";
      });
  CHECK(found);

  Catalog misclassified = cat();
  for (CatalogEntry& e : misclassified.entries_) {
    if (e.key == "erfc") e.expected_class = CommClass::Always;
  }
  CHECK(!verify_tables(misclassified).ok());
}

TEST_CASE("verify_tables verdicts are tolerance-robust") {
  const VerifyReport loose = verify_tables(cat(), 1e-3);
  CHECK(loose.ok());
  int documented = 0;
  for (const VerifyIssue& i : loose.issues) documented += i.documented;
  CHECK(documented >= 2);
}

TEST_CASE("catalog templates survive a print/parse round-trip") {
  for (const CatalogEntry& e : cat().entries()) {
    if (!e.evaluable) continue;
    const Params defaults = e.default_params();
    for (const std::string& text : {e.a2, e.a1, e.a0}) {
      const ExprPtr parsed = parse_expr(text);
      const ExprPtr back = parse_expr(to_string(parsed));
      for (int i = 0; i < 100; ++i) {
        const double t =
            e.domain.lo + (e.domain.hi - e.domain.lo) * i / 99.0;
        const double x = eval_value(parsed, t, defaults);
        const double y = eval_value(back, t, defaults);
        CHECK(std::abs(x - y) <= 1e-12 * (1.0 + std::abs(x)));
      }
    }
  }
}
