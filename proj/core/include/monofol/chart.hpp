#pragma once

#include "monofol/index_set.hpp"

namespace monofol {

// Blow-up center: the coordinate subspace {x_i = 0 : i in indices}.
// Single-index centers are rejected wherever a center is consumed; that
// blow-up is an isomorphism whose divisor bookkeeping would silently
// disagree with expectations.
struct Center {
  IndexSet indices;

  int r() const { return static_cast<int>(indices.size()); }

  bool operator==(const Center&) const = default;
};

// One chart of the blow-up: x_j = y_j, x_i = y_i y_j for i in C \ {j},
// all other coordinates fixed. {y_j = 0} is the exceptional divisor.
struct Chart {
  Center center;
  int j = 0;

  bool operator==(const Chart&) const = default;
};

// Throws InvalidCenter when r < 2 or an index is out of bounds.
void require_valid_center(const Center& c, int n);

// Additionally requires j in the center.
void require_valid_chart(const Chart& chart, int n);

}  // namespace monofol
