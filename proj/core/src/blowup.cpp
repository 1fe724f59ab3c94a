#include "monofol/blowup.hpp"

#include <sstream>

#include "monofol/errors.hpp"

namespace monofol {

namespace {

void require_length(std::size_t len, const Chart& chart) {
  require_valid_chart(chart, static_cast<int>(len));
}

}  // namespace

Vec vector_transform(const Vec& a, const Chart& chart) {
  require_length(a.size(), chart);
  Vec out = a;
  for (int i : chart.center.indices)
    if (i != chart.j) out[i] = a[i] - a[chart.j];
  return out;
}

Vec vector_transform_inverse(const Vec& a, const Chart& chart) {
  require_length(a.size(), chart);
  Vec out = a;
  for (int i : chart.center.indices)
    if (i != chart.j) out[i] = a[i] + a[chart.j];
  return out;
}

Vec exponent_transform(const Vec& m, const Chart& chart) {
  require_length(m.size(), chart);
  Vec out = m;
  Rat total = 0;
  for (int i : chart.center.indices) total += m[i];
  out[chart.j] = total;
  return out;
}

ExpVec exponent_transform(const ExpVec& m, const Chart& chart) {
  require_length(m.size(), chart);
  ExpVec out = m;
  std::int64_t total = 0;
  for (int i : chart.center.indices) total = checked_add(total, m[i]);
  out[chart.j] = total;
  return out;
}

Subspace transform_subspace(const Subspace& v, const Chart& chart) {
  std::vector<Vec> rows;
  for (const Vec& a : v.basis_rows()) rows.push_back(vector_transform(a, chart));
  return Subspace::from_rows(v.ambient(), rows);
}

Subspace exponent_transform_subspace(const Subspace& v, const Chart& chart) {
  std::vector<Vec> rows;
  for (const Vec& m : v.basis_rows()) rows.push_back(exponent_transform(m, chart));
  return Subspace::from_rows(v.ambient(), rows);
}

std::string blowup_label(const Chart& chart) {
  std::ostringstream out;
  out << "blowup(C=" << index_set_to_string_1based(chart.center.indices)
      << "; chart=" << (chart.j + 1) << ")";
  return out.str();
}

Presentation chart_presentation(const Presentation& p, const Chart& chart) {
  require_valid_chart(chart, p.n);
  Presentation out;
  out.n = p.n;
  out.divisor = p.divisor;
  out.divisor.insert(chart.j);
  out.subspace = transform_subspace(p.subspace, chart);
  out.history = p.history;
  out.history.push_back(blowup_label(chart));
  return out;
}

std::vector<std::pair<int, Presentation>> atlas(const Presentation& p, const Center& center) {
  require_valid_center(center, p.n);
  std::vector<std::pair<int, Presentation>> charts;
  for (int j : center.indices) charts.emplace_back(j, chart_presentation(p, Chart{center, j}));
  return charts;
}

CenterCheck center_normal_crossing_check(const Presentation& p, const Center& center) {
  CenterCheck check;
  if (center.r() < 2) check.problems.push_back("center must contain at least two indices");
  if (!in_bounds(center.indices, p.n)) check.problems.push_back("center index out of range");
  check.ok = check.problems.empty();
  if (check.ok) check.meets_divisor = set_intersection(center.indices, p.divisor);
  return check;
}

}  // namespace monofol
