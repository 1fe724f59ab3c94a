#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monofol/rat.hpp"

namespace monofol {

// Dense matrix of exact rationals. Dimensions stay small (a chart's
// coordinate count), so no sparsity here.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols);

  static Mat identity(int n);
  // Explicit column count so matrices with zero rows keep their width.
  static Mat from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Vec row(int r) const;
  std::vector<Vec> row_list() const;
  void swap_rows(int a, int b);
  Mat transposed() const;

  bool operator==(const Mat& other) const = default;

  std::string str() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

struct RrefResult {
  Mat r;
  std::vector<int> pivots;  // pivot column of each pivot row, in row order
  int rank = 0;
};

// Unique reduced row echelon form; preserves the row space.
RrefResult rref(const Mat& m);

// Same elimination but pivot columns are chosen greedily along `priority`
// (a permutation of 0..cols-1): the next pivot is the earliest column in
// priority order with a nonzero entry among the remaining rows. Equivalent
// to permuting columns, running rref, and permuting back.
RrefResult rref_with_column_priority(const Mat& m, const std::vector<int>& priority);

// Canonical basis of {v : m v = 0}: back-substitution from rref, one unit
// entry per free column, free columns ascending.
std::vector<Vec> kernel_basis(const Mat& m);

// Coefficients c with c * basis_rows = v, or nullopt when v is outside the
// row space. Free coefficients are set to zero.
std::optional<Vec> member(const Mat& basis_rows, const Vec& v);

}  // namespace monofol
