#include <doctest.h>

#include <monofol/errors.hpp>
#include <monofol/verify.hpp>

#include "support/generators.hpp"

using namespace monofol;

namespace {

Presentation pres(int n, IndexSet divisor, const std::vector<std::vector<long>>& rows) {
  std::vector<Vec> vecs;
  for (const auto& r : rows) {
    Vec v;
    for (long x : r) v.push_back(rat(x));
    vecs.push_back(v);
  }
  Presentation p;
  p.n = n;
  p.divisor = std::move(divisor);
  p.subspace = Subspace::from_rows(n, vecs);
  return p;
}

bool has_check(const VerifyReport& r, const std::string& name, bool ok) {
  for (const CheckResult& c : r.checks)
    if (c.name == name) return c.ok == ok;
  return false;
}

// x2 d1: moves the divisor component {x1 = 0} sideways.
VectorField shear_field() {
  VectorField w(2);
  w.component(0) = LaurentPoly::variable(2, 1);
  return w;
}

}  // namespace

TEST_CASE("constant_combination_of") {
  VectorField x1d1 = monomial_field({rat(1), rat(0)});
  VectorField d1 = coordinate_field(2, 0);
  CHECK(constant_combination_of(bracket(d1, x1d1), {x1d1, d1}));
  CHECK(constant_combination_of(VectorField(2), {}));
  CHECK(!constant_combination_of(shear_field(), {x1d1}));

  VectorField combo = x1d1;
  combo += coordinate_field(2, 1);
  combo += coordinate_field(2, 1);
  CHECK(constant_combination_of(combo, {x1d1, coordinate_field(2, 1)}));
  // A polynomial multiple of a generator is not a *constant* combination.
  VectorField scaled(2);
  scaled.component(0) = LaurentPoly::variable(2, 0) * LaurentPoly::variable(2, 1);
  CHECK(!constant_combination_of(scaled, {x1d1}));
}

TEST_CASE("verify_generators flags the shear negative control") {
  VerifyReport bad = verify_generators({shear_field()}, {0});
  CHECK(!bad.ok());
  CHECK(has_check(bad, "log-tangency", false));
  CHECK(has_check(bad, "bracket-closure", true));  // a single field always closes

  VerifyReport good = verify_generators({shear_field()}, {1});
  CHECK(has_check(good, "log-tangency", true));
}

TEST_CASE("verify_presentation passes on monomial presentations") {
  for (Presentation p : {pres(3, {0, 1}, {{1, -1, 0}}),
                         pres(2, {}, {{1, 0}}),     // free direction, bracket [d1, x1d1]
                         pres(2, {}, {}),           // zero foliation
                         pres(3, {0}, {{1, 0, 0}, {0, 0, 1}})}) {
    VerifyReport r = verify_presentation(p);
    CHECK(r.ok());
    CHECK(has_check(r, "structural", true));
    CHECK(has_check(r, "log-tangency", true));
    CHECK(has_check(r, "bracket-closure", true));
  }
}

TEST_CASE("verify_presentation stops on structural failure") {
  VerifyReport r = verify_presentation(pres(2, {5}, {{1, 1}}));
  CHECK(!r.ok());
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].name == "structural");
}

TEST_CASE("verify_presentation on randomized pipeline outputs") {
  testgen::Rng rng(240823);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 4;
    Presentation p = testgen::random_presentation(rng, n);
    // One blow-up then one localization, arbitrary.
    Presentation q = chart_presentation(p, testgen::random_chart(rng, n));
    LocalizeResult loc = localize(q, testgen::random_point(rng, n));
    CHECK(verify_presentation(p).ok());
    CHECK(verify_presentation(q).ok());
    CHECK(verify_presentation(loc.presentation).ok());
  }
}

TEST_CASE("verify_chart_replay matches closed forms on chart outputs") {
  testgen::Rng rng(5882353);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 4;
    Presentation p = testgen::random_presentation(rng, n);
    Chart chart = testgen::random_chart(rng, n);
    VerifyReport r = verify_chart_replay(chart_presentation(p, chart), chart);
    CHECK(r.ok());
    CHECK(has_check(r, "chart-replay/subspace", true));
    CHECK(has_check(r, "chart-replay/strict-transform", true));
  }
}

TEST_CASE("verify_chart_replay rejects invalid charts") {
  Presentation p = pres(3, {}, {{1, -1, 0}});
  CHECK_THROWS_AS(verify_chart_replay(p, Chart{Center{{0}}, 0}), InvalidCenter);
}

TEST_CASE("verify_monomial_change confirms the worked localization") {
  Presentation p = pres(2, {0, 1}, {{1, 1}});
  RationalPoint pt{rat(1), rat(0)};
  LocalizeResult r = localize(p, pt);
  REQUIRE(r.change.has_value());

  VerifyReport report = verify_monomial_change(p, pt, r.presentation, *r.change);
  CHECK(report.ok());
  CHECK(has_check(report, "rectify/no-gap", true));
  CHECK(has_check(report, "rectify/shifts", true));
  CHECK(has_check(report, "rectify/first-kind", true));
  CHECK(has_check(report, "rectify/second-kind", true));
  CHECK(has_check(report, "rectify/divisor", true));
  CHECK(has_check(report, "rectify/rank", true));
}

TEST_CASE("verify_monomial_change flags tampered data") {
  Presentation p = pres(2, {0, 1}, {{1, 1}});
  RationalPoint pt{rat(1), rat(0)};
  LocalizeResult r = localize(p, pt);
  REQUIRE(r.change.has_value());

  SUBCASE("wrong shift value") {
    MonomialChange bad = *r.change;
    bad.shifts[0] = rat(2);
    CHECK(has_check(verify_monomial_change(p, pt, r.presentation, bad),
                    "rectify/shifts", false));
  }
  SUBCASE("wrong multiplier exponent") {
    MonomialChange bad = *r.change;
    bad.multipliers[1][0] = rat(3);
    CHECK(has_check(verify_monomial_change(p, pt, r.presentation, bad),
                    "rectify/first-kind", false));
  }
  SUBCASE("wrong divisor") {
    Presentation bad = r.presentation;
    bad.divisor = {0, 1};
    CHECK(has_check(verify_monomial_change(p, pt, bad, *r.change),
                    "rectify/divisor", false));
  }
  SUBCASE("gapped localization must not carry a change") {
    RationalPoint diag{rat(1), rat(2)};
    LocalizeResult gapped = localize(p, diag);
    CHECK(!gapped.change.has_value());
    VerifyReport report =
        verify_monomial_change(p, diag, gapped.presentation, MonomialChange{});
    CHECK(has_check(report, "rectify/no-gap", false));
  }
}

TEST_CASE("verify_monomial_change on randomized localizations") {
  testgen::Rng rng(987654321);
  int verified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 5;
    Presentation p = testgen::random_presentation(rng, n);
    RationalPoint pt = testgen::random_point(rng, n);
    LocalizeResult r = localize(p, pt);
    if (!r.change) continue;
    CHECK(verify_monomial_change(p, pt, r.presentation, *r.change).ok());
    ++verified;
  }
  CHECK(verified > 50);  // the gap-free case must be well represented
}

TEST_CASE("verify_first_integrals") {
  Presentation p = pres(3, {0, 1}, {{1, -1, 0}});
  VerifyReport r = verify_first_integrals(p, 42, 50);
  CHECK(r.ok());
  CHECK(has_check(r, "first-integrals/perp-lattice", true));
  CHECK(has_check(r, "first-integrals/eigenrule", true));

  // Fractional basis entries exercise the denominator clearing.
  Presentation halves;
  halves.n = 2;
  halves.subspace = Subspace::from_rows(2, {{rat(1), rat(1, 2)}});
  CHECK(verify_first_integrals(halves, 7, 25).ok());

  testgen::Rng rng(1000003);
  for (int trial = 0; trial < 50; ++trial) {
    Presentation q = testgen::random_presentation(rng, 2 + trial % 4);
    CHECK(verify_first_integrals(q, 1000 + static_cast<std::uint64_t>(trial), 20).ok());
  }
}

TEST_CASE("report plumbing") {
  VerifyReport r;
  CHECK(r.ok());
  r.add("a", true, "fine");
  r.add("b", false, "broken");
  CHECK(!r.ok());
  VerifyReport s;
  s.add("c", true);
  s.merge(r);
  CHECK(s.checks.size() == 3);
  CHECK(!s.ok());
}
