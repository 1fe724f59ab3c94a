#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monofol/blowup.hpp"
#include "monofol/presentation.hpp"

namespace monofol {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  void add(const std::string& name, bool ok, const std::string& detail = "");
  void merge(const VerifyReport& other);
};

// W = sum c_g g with constant coefficients. The level of module membership
// a monomial presentation needs: its brackets are zero or scalar multiples
// of coordinate generators.
bool constant_combination_of(const VectorField& w, const std::vector<VectorField>& gens);

// Computable integrability consequences for an explicit generator list:
// every generator tangent to the divisor, every pairwise bracket inside the
// constant span of the generators. Labels each check in the report.
VerifyReport verify_generators(const std::vector<VectorField>& gens, const IndexSet& divisor);

// verify_generators on the presentation's own generators, preceded by the
// structural validation.
VerifyReport verify_presentation(const Presentation& p);

// Replays the strict transform symbolically for one chart step that
// produced `after`: recovers the upstream subspace through the inverse
// transform, pulls each generator back through the chart, saturates by the
// exceptional coordinate, and compares against the closed form.
VerifyReport verify_chart_replay(const Presentation& after, const Chart& chart);

// Confirms a localization's coordinate change by exact substitution:
// first-kind generators act on the new coordinates as unit multiples of
// their pivot direction, second-kind generators keep their monomial form.
// Rational exponents are checked after clearing denominators.
VerifyReport verify_monomial_change(const Presentation& p, const RationalPoint& point,
                                    const Presentation& localized, const MonomialChange& change);

// Seeded spot checks of the first-integral lattice: every perp basis vector
// (cleared to integers) is annihilated by every generator, and random
// integer exponent vectors obey the eigenvalue rule W_a(x^m) = <a,m> x^m.
VerifyReport verify_first_integrals(const Presentation& p, std::uint64_t seed, int samples);

}  // namespace monofol
