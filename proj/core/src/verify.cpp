#include "monofol/verify.hpp"

#include <map>
#include <random>
#include <sstream>
#include <utility>

namespace monofol {

bool VerifyReport::ok() const {
  for (const CheckResult& c : checks)
    if (!c.ok) return false;
  return true;
}

void VerifyReport::add(const std::string& name, bool ok, const std::string& detail) {
  checks.push_back({name, ok, detail});
}

void VerifyReport::merge(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

// Coordinates of a field over the (component, exponent) support basis.
using FieldCoords = std::map<std::pair<int, ExpVec>, Rat>;

FieldCoords field_coords(const VectorField& w) {
  FieldCoords coords;
  for (int i = 0; i < w.vars(); ++i)
    for (const auto& [e, c] : w.component(i).terms()) coords[{i, e}] = c;
  return coords;
}

}  // namespace

bool constant_combination_of(const VectorField& w, const std::vector<VectorField>& gens) {
  if (w.is_zero()) return true;

  std::vector<FieldCoords> gen_coords;
  FieldCoords target = field_coords(w);
  std::map<std::pair<int, ExpVec>, int> slot;
  for (const auto& [key, c] : target) slot.emplace(key, static_cast<int>(slot.size()));
  for (const VectorField& g : gens) {
    gen_coords.push_back(field_coords(g));
    for (const auto& [key, c] : gen_coords.back()) slot.emplace(key, static_cast<int>(slot.size()));
  }

  int cols = static_cast<int>(slot.size());
  Mat rows(static_cast<int>(gens.size()), cols);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (const auto& [key, c] : gen_coords[g]) rows.at(static_cast<int>(g), slot.at(key)) = c;
  Vec v(static_cast<std::size_t>(cols), Rat(0));
  for (const auto& [key, c] : target) v[slot.at(key)] = c;
  return member(rows, v).has_value();
}

VerifyReport verify_generators(const std::vector<VectorField>& gens, const IndexSet& divisor) {
  VerifyReport report;

  bool tangent = true;
  std::ostringstream tangent_detail;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!is_log_tangent(gens[g], divisor)) {
      tangent = false;
      tangent_detail << "generator " << (g + 1) << " (" << gens[g].str()
                     << ") not tangent to the divisor; ";
    }
  }
  report.add("log-tangency", tangent, tangent_detail.str());

  bool closed = true;
  std::ostringstream bracket_detail;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      VectorField br = bracket(gens[a], gens[b]);
      if (!constant_combination_of(br, gens)) {
        closed = false;
        bracket_detail << "[g" << (a + 1) << ",g" << (b + 1) << "] = " << br.str()
                       << " outside the generator span; ";
      }
    }
  }
  report.add("bracket-closure", closed, bracket_detail.str());
  return report;
}

VerifyReport verify_presentation(const Presentation& p) {
  VerifyReport report;

  ValidationReport structure = validate(p);
  std::ostringstream issues;
  for (const ValidationIssue& issue : structure.issues)
    issues << validation_code_name(issue.code) << ": " << issue.message << "; ";
  report.add("structural", structure.ok(), issues.str());
  if (!structure.ok()) return report;

  report.merge(verify_generators(generators(p), p.divisor));
  return report;
}

VerifyReport verify_chart_replay(const Presentation& after, const Chart& chart) {
  VerifyReport report;
  require_valid_chart(chart, after.n);

  std::vector<Vec> upstream;
  for (const Vec& row : after.subspace.basis_rows())
    upstream.push_back(vector_transform_inverse(row, chart));
  Subspace before = Subspace::from_rows(after.n, upstream);

  report.add("chart-replay/subspace", transform_subspace(before, chart) == after.subspace,
             "transformed upstream subspace must reproduce the chart subspace");

  bool oracle_ok = true;
  std::ostringstream detail;
  for (const Vec& a : before.basis_rows()) {
    Saturation s = saturate_exceptional(pullback_chart(monomial_field(a), chart), chart.j);
    VectorField expected = monomial_field(vector_transform(a, chart));
    if (s.field != expected) {
      oracle_ok = false;
      detail << "strict transform of " << vec_to_string(a) << " gave " << s.field.str()
             << ", closed form says " << expected.str() << "; ";
    }
  }
  report.add("chart-replay/strict-transform", oracle_ok, detail.str());
  return report;
}

namespace {

// z_k as a monomial in the old coordinates: exponent e_k plus the
// multiplier row, rational entries allowed.
Vec new_coordinate_exponent(int n, int k, const MonomialChange& change) {
  Vec m(static_cast<std::size_t>(n), Rat(0));
  m[k] = 1;
  auto it = change.multipliers.find(k);
  if (it != change.multipliers.end())
    for (const auto& [i, mu] : it->second) m[i] += mu;
  return m;
}

// x^(d*m) for the denominator-clearing d, as an integer Laurent monomial.
LaurentPoly cleared_monomial(const Vec& m) {
  mpz_class d = denominator_lcm(m);
  ExpVec e(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    mpz_class num = m[i].get_num() * (d / m[i].get_den());
    if (!num.fits_slong_p()) throw std::overflow_error("cleared exponent too large");
    e[i] = num.get_si();
  }
  return LaurentPoly::monomial(static_cast<int>(m.size()), e, Rat(1));
}

}  // namespace

VerifyReport verify_monomial_change(const Presentation& p, const RationalPoint& point,
                                    const Presentation& localized, const MonomialChange& change) {
  VerifyReport report;

  IndexSet i1, i2;
  for (int i = 0; i < p.n; ++i) {
    if (point.at(static_cast<std::size_t>(i)) != 0)
      i1.insert(i);
    else
      i2.insert(i);
  }
  BlockBasis bb = block_basis(p.subspace, i1, i2);
  report.add("rectify/no-gap", !bb.lemma_gap,
             "a monomial change must only be emitted in the gap-free case");
  if (bb.lemma_gap) return report;

  bool shifts_ok = change.shifts.size() == i1.size();
  for (int i : i1) {
    auto it = change.shifts.find(i);
    if (it == change.shifts.end() || it->second != point[i]) shifts_ok = false;
  }
  report.add("rectify/shifts", shifts_ok, "shift per nonzero coordinate, value p_i");

  // z expressions in the old coordinates, exact.
  std::vector<std::pair<int, LaurentPoly>> shifted;  // (i, x_i - p_i)
  for (int i : i1) {
    LaurentPoly z = LaurentPoly::variable(p.n, i);
    z += LaurentPoly::constant(p.n, -point[i]);
    shifted.emplace_back(i, z);
  }

  bool first_ok = true;
  std::ostringstream first_detail;
  for (const BlockRow& row : bb.first_kind) {
    VectorField w = monomial_field(row.row);
    for (const auto& [i, z] : shifted) {
      LaurentPoly image = apply(w, z);
      LaurentPoly expected =
          (i == row.pivot) ? LaurentPoly::variable(p.n, i) : LaurentPoly(p.n);
      if (image != expected) {
        first_ok = false;
        first_detail << "pivot " << (row.pivot + 1) << " generator on z_" << (i + 1)
                     << ": got " << image.str() << "; ";
      }
    }
    for (int k : i2) {
      Vec m = new_coordinate_exponent(p.n, k, change);
      LaurentPoly zk = cleared_monomial(m);
      if (!apply(w, zk).is_zero() || dot(row.row, m) != 0) {
        first_ok = false;
        first_detail << "pivot " << (row.pivot + 1) << " generator does not annihilate z_"
                     << (k + 1) << "; ";
      }
    }
  }
  report.add("rectify/first-kind", first_ok, first_detail.str());

  bool second_ok = true;
  std::ostringstream second_detail;
  for (const BlockRow& row : bb.second_kind) {
    VectorField w = monomial_field(row.row);
    for (const auto& [i, z] : shifted) {
      if (!apply(w, z).is_zero()) {
        second_ok = false;
        second_detail << "second-kind generator moves z_" << (i + 1) << "; ";
      }
    }
    for (int k : i2) {
      Vec m = new_coordinate_exponent(p.n, k, change);
      LaurentPoly zk = cleared_monomial(m);
      // Eigenvalue on the cleared monomial must be d * w_k, i.e. the
      // monomial coefficient is unchanged in the new coordinates.
      mpz_class d = denominator_lcm(m);
      LaurentPoly expected = zk * (Rat(d) * row.row[k]);
      if (apply(w, zk) != expected || dot(row.row, m) != row.row[k]) {
        second_ok = false;
        second_detail << "second-kind generator not monomial on z_" << (k + 1) << "; ";
      }
    }
  }
  report.add("rectify/second-kind", second_ok, second_detail.str());

  report.add("rectify/divisor", localized.divisor == set_intersection(p.divisor, i2),
             "localized divisor must be I intersect I2");
  report.add("rectify/rank", localized.subspace.dim() == p.subspace.dim(),
             "localization preserves the rank");
  return report;
}

VerifyReport verify_first_integrals(const Presentation& p, std::uint64_t seed, int samples) {
  VerifyReport report;
  Subspace vp = perp(p.subspace);
  std::vector<Vec> basis = p.subspace.basis_rows();

  bool lattice_ok = true;
  std::ostringstream lattice_detail;
  for (const Vec& m : vp.basis_rows()) {
    LaurentPoly f = cleared_monomial(m);
    for (const Vec& a : basis) {
      if (!apply(monomial_field(a), f).is_zero()) {
        lattice_ok = false;
        lattice_detail << "x^" << vec_to_string(m) << " not annihilated by "
                       << vec_to_string(a) << "; ";
      }
    }
  }
  report.add("first-integrals/perp-lattice", lattice_ok, lattice_detail.str());

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> exp_dist(-3, 3);
  bool eigen_ok = true;
  for (int s = 0; s < samples; ++s) {
    ExpVec m(static_cast<std::size_t>(p.n), 0);
    for (auto& e : m) e = exp_dist(rng);
    LaurentPoly f = LaurentPoly::monomial(p.n, m, Rat(1));
    Vec mr(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) mr[i] = Rat(static_cast<long>(m[i]));
    for (const Vec& a : basis) {
      if (apply(monomial_field(a), f) != f * dot(a, mr)) eigen_ok = false;
    }
  }
  std::ostringstream eigen_detail;
  eigen_detail << samples << " random exponent vectors, seed " << seed;
  report.add("first-integrals/eigenrule", eigen_ok, eigen_detail.str());
  return report;
}

}  // namespace monofol
