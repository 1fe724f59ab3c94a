#include "monofol/block_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace monofol {

namespace {

Vec restrict_to(const Vec& row, const IndexSet& support, const std::vector<int>& exclude) {
  Vec out(row.size(), Rat(0));
  for (int i : support) {
    if (std::find(exclude.begin(), exclude.end(), i) != exclude.end()) continue;
    out[i] = row[i];
  }
  return out;
}

}  // namespace

Vec BlockBasis::a_part(const BlockRow& r) const { return restrict_to(r.row, i1, i1_pivots); }
Vec BlockBasis::b_part(const BlockRow& r) const { return restrict_to(r.row, i2, i2_pivots); }
Vec BlockBasis::c_part(const BlockRow& r) const { return restrict_to(r.row, i2, i2_pivots); }

std::vector<Vec> BlockBasis::all_rows() const {
  std::vector<Vec> out;
  for (const BlockRow& r : first_kind) out.push_back(r.row);
  for (const BlockRow& r : second_kind) out.push_back(r.row);
  return out;
}

BlockBasis block_basis(const Subspace& v, const IndexSet& i1, const IndexSet& i2) {
  int n = v.ambient();
  if (!in_bounds(i1, n) || !in_bounds(i2, n) ||
      static_cast<int>(i1.size() + i2.size()) != n || !set_intersection(i1, i2).empty())
    throw std::invalid_argument("block_basis: i1, i2 must partition the coordinates");

  std::vector<int> priority(i1.begin(), i1.end());
  priority.insert(priority.end(), i2.begin(), i2.end());
  RrefResult red = rref_with_column_priority(v.basis(), priority);

  BlockBasis b;
  b.ambient = n;
  b.i1 = i1;
  b.i2 = i2;
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    BlockRow row{red.pivots[r], red.r.row(static_cast<int>(r))};
    if (set_contains(i1, row.pivot)) {
      b.i1_pivots.push_back(row.pivot);
      b.first_kind.push_back(std::move(row));
    } else {
      b.i2_pivots.push_back(row.pivot);
      b.second_kind.push_back(std::move(row));
    }
  }
  for (const BlockRow& row : b.first_kind) {
    if (!is_zero_vec(b.a_part(row))) {
      b.lemma_gap = true;
      break;
    }
  }
  return b;
}

std::vector<Vec> paper_basis(const BlockBasis& b) {
  std::vector<Vec> out;
  for (const BlockRow& r : b.first_kind) {
    Vec v = b.b_part(r);
    v[r.pivot] = 1;
    out.push_back(std::move(v));
  }
  for (const BlockRow& r : b.second_kind) out.push_back(r.row);
  return out;
}

}  // namespace monofol
