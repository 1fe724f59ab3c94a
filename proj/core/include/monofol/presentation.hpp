#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monofol/block_basis.hpp"
#include "monofol/subspace.hpp"
#include "monofol/vector_field.hpp"

namespace monofol {

// Local presentation (x, I, V) of a locally monomial foliated space at a
// point: a divisor index set and a subspace of the exponent space. The
// history records the blow-up charts and localizations that produced it.
struct Presentation {
  int n = 0;
  IndexSet divisor;
  Subspace subspace;
  std::vector<std::string> history;

  bool operator==(const Presentation&) const = default;
};

using RationalPoint = std::vector<Rat>;

enum class ValidationCode {
  IndexOutOfRange,
  NonCanonicalBasis,
  AmbientMismatch,
};

std::string validation_code_name(ValidationCode code);

struct ValidationIssue {
  ValidationCode code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  void add(ValidationCode code, const std::string& message) { issues.push_back({code, message}); }
};

// Structural checks: divisor indices in range, subspace over the right
// ambient space, basis canonical.
ValidationReport validate(const Presentation& p);

int rank(const Presentation& p);

// {i outside the divisor : e_i in V}; these contribute plain d/dx_i
// generators.
IndexSet free_directions(const Presentation& p);

// Monomial fields of the basis vectors of V, then d/dx_i for each free
// direction.
std::vector<VectorField> generators(const Presentation& p);

// Coordinate change to a point with nonzero coordinates I1: x_i shifts by
// p_i for i in I1, and z_k = x_k * prod_{i in I1} x_i^{mu_{k,i}} rescales
// the I2 coordinates. Exponents are rational; only nonzero entries stored.
struct MonomialChange {
  std::map<int, Rat> shifts;
  std::map<int, std::map<int, Rat>> multipliers;

  bool is_identity() const { return shifts.empty() && multipliers.empty(); }
  bool operator==(const MonomialChange&) const = default;
};

struct LocalizeResult {
  Presentation presentation;
  // Present exactly when the block basis has no lemma gap; in the gapped
  // case the rectifying change exists but has no monomial closed form, so
  // none is emitted.
  std::optional<MonomialChange> change;
};

// Re-presents the foliation at p. With I1 = nonzero coordinates of p and
// I2 its complement: the new divisor is I intersect I2, the new subspace is
// (V intersect F^{I2}) + span of the first-kind pivot directions, and the
// rank is preserved. Localizing at the origin is the identity.
// Throws LengthMismatch when p has the wrong length.
LocalizeResult localize(const Presentation& p, const RationalPoint& point);

std::string localize_label(const RationalPoint& point);

}  // namespace monofol
