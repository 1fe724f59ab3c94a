#pragma once

#include <utility>
#include <vector>

#include "monofol/chart.hpp"
#include "monofol/presentation.hpp"

namespace monofol {

// Exponent-space transform of chart j: a_i - a_j on the center off the
// pivot, a_j at the pivot, identity elsewhere. Monomial fields of V map to
// monomial fields of A_j V under the strict transform; unimodular, so the
// dimension is preserved.
Vec vector_transform(const Vec& a, const Chart& chart);

Vec vector_transform_inverse(const Vec& a, const Chart& chart);

// Pullback on monomial exponents: the pivot exponent becomes the sum over
// the center, everything else is fixed. Dual to vector_transform:
// <A_j a, B_j m> = <a, m>.
Vec exponent_transform(const Vec& m, const Chart& chart);
ExpVec exponent_transform(const ExpVec& m, const Chart& chart);

Subspace transform_subspace(const Subspace& v, const Chart& chart);
Subspace exponent_transform_subspace(const Subspace& v, const Chart& chart);

// The presentation in chart j: divisor gains the exceptional index j, the
// subspace is A_j V, history records the step.
Presentation chart_presentation(const Presentation& p, const Chart& chart);

std::string blowup_label(const Chart& chart);

// All charts of the blow-up along the center, ascending chart index.
std::vector<std::pair<int, Presentation>> atlas(const Presentation& p, const Center& center);

// In this data model a center is a coordinate subspace of the chart, so
// normal crossings holds by construction; the report validates bounds and
// r >= 2 and lists which divisor components contain the center.
struct CenterCheck {
  bool ok = false;
  std::vector<std::string> problems;
  IndexSet meets_divisor;  // C intersect I
};

CenterCheck center_normal_crossing_check(const Presentation& p, const Center& center);

}  // namespace monofol
