#pragma once

#include <vector>

#include "monofol/index_set.hpp"
#include "monofol/mat.hpp"

namespace monofol {

// A subspace of Q^n held in canonical form: the basis matrix is its own
// reduced row echelon form, one row per dimension. Two subspaces are equal
// iff their canonical bases match entry-wise, so operator== decides
// subspace equality.
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  // Canonicalizes: rref of the stacked rows, zero rows dropped.
  static Subspace from_rows(int ambient, const std::vector<Vec>& rows);
  static Subspace from_matrix(const Mat& m);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  std::vector<Vec> basis_rows() const { return basis_.row_list(); }

  bool operator==(const Subspace& other) const = default;

private:
  int ambient_ = 0;
  Mat basis_{0, 0};
};

// Orthogonal complement {m : <a,m> = 0 for all a in V}; dim V + dim perp = n.
Subspace perp(const Subspace& v);

// Throws LengthMismatch when x has the wrong length.
bool contains(const Subspace& v, const Vec& x);

// {v in V : v_i = 0 for all i outside I2}. Computed by solving for the
// coefficient combinations that vanish on the complement, independently of
// the block-basis route.
Subspace intersect_coordinate(const Subspace& v, const IndexSet& i2);

}  // namespace monofol
