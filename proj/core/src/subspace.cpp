#include "monofol/subspace.hpp"

#include <stdexcept>

#include "monofol/errors.hpp"

namespace monofol {

Subspace Subspace::zero(int ambient) {
  Subspace v;
  v.ambient_ = ambient;
  v.basis_ = Mat(0, ambient);
  return v;
}

Subspace Subspace::full(int ambient) {
  Subspace v;
  v.ambient_ = ambient;
  v.basis_ = Mat::identity(ambient);
  return v;
}

Subspace Subspace::from_rows(int ambient, const std::vector<Vec>& rows) {
  return from_matrix(Mat::from_rows(rows, ambient));
}

Subspace Subspace::from_matrix(const Mat& m) {
  RrefResult red = rref(m);
  Subspace v;
  v.ambient_ = m.cols();
  v.basis_ = Mat(red.rank, m.cols());
  for (int r = 0; r < red.rank; ++r)
    for (int c = 0; c < m.cols(); ++c) v.basis_.at(r, c) = red.r.at(r, c);
  return v;
}

Subspace perp(const Subspace& v) {
  return Subspace::from_rows(v.ambient(), kernel_basis(v.basis()));
}

bool contains(const Subspace& v, const Vec& x) {
  if (static_cast<int>(x.size()) != v.ambient())
    throw LengthMismatch("contains: vector length != ambient");
  return member(v.basis(), x).has_value();
}

Subspace intersect_coordinate(const Subspace& v, const IndexSet& i2) {
  if (!in_bounds(i2, v.ambient()))
    throw std::invalid_argument("intersect_coordinate: index out of range");
  IndexSet i1 = complement(i2, v.ambient());

  // Coefficient vectors c with (c B) supported inside I2, i.e. c in the
  // kernel of the I1 columns of B, transposed.
  Mat restricted(v.dim(), static_cast<int>(i1.size()));
  int col = 0;
  for (int i : i1) {
    for (int r = 0; r < v.dim(); ++r) restricted.at(r, col) = v.basis().at(r, i);
    ++col;
  }
  std::vector<Vec> rows;
  for (const Vec& c : kernel_basis(restricted.transposed())) {
    Vec w(static_cast<std::size_t>(v.ambient()), Rat(0));
    for (int r = 0; r < v.dim(); ++r)
      for (int j = 0; j < v.ambient(); ++j) w[j] += c[r] * v.basis().at(r, j);
    rows.push_back(std::move(w));
  }
  return Subspace::from_rows(v.ambient(), rows);
}

}  // namespace monofol
