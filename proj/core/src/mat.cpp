#include "monofol/mat.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "monofol/errors.hpp"

namespace monofol {

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, Rat(0));
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  Mat m(static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw LengthMismatch("Mat::from_rows: row length != cols");
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(int r) const {
  Vec out(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

std::vector<Vec> Mat::row_list() const {
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void Mat::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::string Mat::str() const {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < rows_; ++r) {
    if (r > 0) out << "; ";
    out << vec_to_string(row(r));
  }
  out << "]";
  return out.str();
}

RrefResult rref_with_column_priority(const Mat& m, const std::vector<int>& priority) {
  if (static_cast<int>(priority.size()) != m.cols())
    throw std::invalid_argument("rref: priority is not a column permutation");
  std::vector<bool> seen(priority.size(), false);
  for (int c : priority) {
    if (c < 0 || c >= m.cols() || seen[c])
      throw std::invalid_argument("rref: priority is not a column permutation");
    seen[c] = true;
  }

  RrefResult res;
  res.r = m;
  Mat& r = res.r;
  int next_row = 0;
  for (int col : priority) {
    if (next_row == r.rows()) break;
    int pivot_row = -1;
    for (int q = next_row; q < r.rows(); ++q) {
      if (r.at(q, col) != 0) {
        pivot_row = q;
        break;
      }
    }
    if (pivot_row < 0) continue;
    r.swap_rows(pivot_row, next_row);
    Rat inv = 1 / r.at(next_row, col);
    for (int c = 0; c < r.cols(); ++c) r.at(next_row, c) *= inv;
    for (int q = 0; q < r.rows(); ++q) {
      if (q == next_row || r.at(q, col) == 0) continue;
      Rat factor = r.at(q, col);
      for (int c = 0; c < r.cols(); ++c) r.at(q, c) -= factor * r.at(next_row, c);
    }
    res.pivots.push_back(col);
    ++next_row;
  }
  res.rank = next_row;
  return res;
}

RrefResult rref(const Mat& m) {
  std::vector<int> natural(static_cast<std::size_t>(m.cols()));
  std::iota(natural.begin(), natural.end(), 0);
  return rref_with_column_priority(m, natural);
}

std::vector<Vec> kernel_basis(const Mat& m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : red.pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(static_cast<std::size_t>(m.cols()), Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
      v[red.pivots[i]] = -red.r.at(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> member(const Mat& basis_rows, const Vec& v) {
  if (static_cast<int>(v.size()) != basis_rows.cols())
    throw LengthMismatch("member: vector length != cols");
  int k = basis_rows.rows();
  // Solve basis_rows^T c = v^T via the augmented system.
  Mat aug(basis_rows.cols(), k + 1);
  for (int i = 0; i < basis_rows.cols(); ++i) {
    for (int j = 0; j < k; ++j) aug.at(i, j) = basis_rows.at(j, i);
    aug.at(i, k) = v[i];
  }
  RrefResult red = rref(aug);
  for (int p : red.pivots)
    if (p == k) return std::nullopt;
  Vec c(static_cast<std::size_t>(k), Rat(0));
  for (std::size_t i = 0; i < red.pivots.size(); ++i)
    c[red.pivots[i]] = red.r.at(static_cast<int>(i), k);
  return c;
}

}  // namespace monofol
