#include "monofol/presentation.hpp"

#include <cassert>
#include <sstream>

#include "monofol/errors.hpp"

namespace monofol {

std::string validation_code_name(ValidationCode code) {
  switch (code) {
    case ValidationCode::IndexOutOfRange: return "IndexOutOfRange";
    case ValidationCode::NonCanonicalBasis: return "NonCanonicalBasis";
    case ValidationCode::AmbientMismatch: return "AmbientMismatch";
  }
  return "Unknown";
}

ValidationReport validate(const Presentation& p) {
  ValidationReport report;
  for (int i : p.divisor) {
    if (i < 0 || i >= p.n) {
      std::ostringstream msg;
      msg << "divisor index " << (i + 1) << " outside 1.." << p.n;
      report.add(ValidationCode::IndexOutOfRange, msg.str());
    }
  }
  if (p.subspace.ambient() != p.n) {
    std::ostringstream msg;
    msg << "subspace ambient " << p.subspace.ambient() << " != n = " << p.n;
    report.add(ValidationCode::AmbientMismatch, msg.str());
  } else {
    RrefResult red = rref(p.subspace.basis());
    if (red.rank != p.subspace.dim() || red.r != p.subspace.basis())
      report.add(ValidationCode::NonCanonicalBasis, "basis is not in reduced echelon form");
  }
  return report;
}

int rank(const Presentation& p) { return p.subspace.dim(); }

IndexSet free_directions(const Presentation& p) {
  IndexSet free;
  for (int i = 0; i < p.n; ++i) {
    if (set_contains(p.divisor, i)) continue;
    if (contains(p.subspace, unit_vec(p.n, i))) free.insert(i);
  }
  return free;
}

std::vector<VectorField> generators(const Presentation& p) {
  std::vector<VectorField> gens;
  for (const Vec& a : p.subspace.basis_rows()) gens.push_back(monomial_field(a));
  for (int i : free_directions(p)) gens.push_back(coordinate_field(p.n, i));
  return gens;
}

std::string localize_label(const RationalPoint& point) {
  std::ostringstream out;
  out << "localize(p=" << vec_to_string(point) << ")";
  return out.str();
}

LocalizeResult localize(const Presentation& p, const RationalPoint& point) {
  if (static_cast<int>(point.size()) != p.n)
    throw LengthMismatch("localize: point length != n");

  IndexSet i1, i2;
  for (int i = 0; i < p.n; ++i) {
    if (point[i] != 0)
      i1.insert(i);
    else
      i2.insert(i);
  }
  if (i1.empty()) {
    // Identity localization.
    return {p, MonomialChange{}};
  }

  BlockBasis bb = block_basis(p.subspace, i1, i2);

  std::vector<Vec> rows = intersect_coordinate(p.subspace, i2).basis_rows();
  for (int pivot : bb.i1_pivots) rows.push_back(unit_vec(p.n, pivot));
  Subspace v2 = Subspace::from_rows(p.n, rows);
  assert(v2.dim() == p.subspace.dim());

  Presentation out;
  out.n = p.n;
  out.divisor = set_intersection(p.divisor, i2);
  out.subspace = v2;
  out.history = p.history;
  out.history.push_back(localize_label(point));

  LocalizeResult result{std::move(out), std::nullopt};
  if (!bb.lemma_gap) {
    MonomialChange change;
    for (int i : i1) change.shifts[i] = point[i];
    for (const BlockRow& row : bb.first_kind) {
      for (int k : bb.i2) {
        if (row.row[k] == 0) continue;
        change.multipliers[k][row.pivot] = -row.row[k];
      }
    }
    result.change = std::move(change);
  }
  return result;
}

}  // namespace monofol
