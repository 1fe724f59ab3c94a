#include "monofol/chart.hpp"

#include "monofol/errors.hpp"

namespace monofol {

void require_valid_center(const Center& c, int n) {
  if (c.r() < 2) throw InvalidCenter("center must contain at least two indices");
  if (!in_bounds(c.indices, n)) throw InvalidCenter("center index out of range");
}

void require_valid_chart(const Chart& chart, int n) {
  require_valid_center(chart.center, n);
  if (!set_contains(chart.center.indices, chart.j))
    throw InvalidCenter("chart index not in the center");
}

}  // namespace monofol
