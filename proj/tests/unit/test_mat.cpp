#include <doctest.h>

#include <algorithm>
#include <numeric>

#include <monofol/mat.hpp>

#include "support/generators.hpp"

using namespace monofol;

namespace {

Mat make(const std::vector<std::vector<long>>& rows, int cols) {
  Mat m(static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m.at(static_cast<int>(r), static_cast<int>(c)) = rat(rows[r][c]);
  return m;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out(static_cast<std::size_t>(m.rows()), Rat(0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
  return out;
}

// Independent reference for priority elimination: permute the columns into
// priority order, run plain rref, and permute back.
RrefResult priority_oracle(const Mat& m, const std::vector<int>& priority) {
  Mat permuted(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) permuted.at(r, c) = m.at(r, priority[c]);
  RrefResult inner = rref(permuted);
  RrefResult out;
  out.r = Mat(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.r.at(r, priority[c]) = inner.r.at(r, c);
  for (int p : inner.pivots) out.pivots.push_back(priority[p]);
  out.rank = inner.rank;
  return out;
}

}  // namespace

TEST_CASE("rref normalizes pivots and clears their columns") {
  RrefResult r = rref(make({{0, 1, 3}, {1, 0, 2}}, 3));
  CHECK(r.r == make({{1, 0, 2}, {0, 1, 3}}, 3));
  CHECK(r.pivots == std::vector<int>{0, 1});
  CHECK(r.rank == 2);
}

TEST_CASE("rref handles dependent rows and fractions") {
  RrefResult r = rref(make({{2, 4}, {1, 2}}, 2));
  CHECK(r.rank == 1);
  CHECK(r.r.row(0) == Vec{rat(1), rat(2)});
  CHECK(is_zero_vec(r.r.row(1)));

  Mat m(2, 2);
  m.at(0, 0) = rat(1, 2);
  m.at(0, 1) = rat(1, 3);
  m.at(1, 0) = rat(1);
  m.at(1, 1) = rat(1);
  RrefResult f = rref(m);
  CHECK(f.rank == 2);
  CHECK(f.r == Mat::identity(2));
}

TEST_CASE("rref of empty and zero matrices") {
  CHECK(rref(Mat(0, 3)).rank == 0);
  CHECK(rref(Mat(2, 0)).rank == 0);
  RrefResult z = rref(make({{0, 0}, {0, 0}}, 2));
  CHECK(z.rank == 0);
  CHECK(z.r == make({{0, 0}, {0, 0}}, 2));
}

TEST_CASE("rref is idempotent and preserves the row space") {
  testgen::Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    Mat m = testgen::random_mat(rng, 3, 4);
    RrefResult r = rref(m);
    CHECK(rref(r.r).r == r.r);
    // Every original row is a combination of the echelon rows and vice versa.
    for (int i = 0; i < m.rows(); ++i) {
      CHECK(member(r.r, m.row(i)).has_value());
      CHECK(member(m, r.r.row(i)).has_value());
    }
  }
}

TEST_CASE("column priority: frozen examples") {
  SUBCASE("single row prefers the prioritized column") {
    RrefResult r = rref_with_column_priority(make({{1, 1}}, 2), {1, 0});
    CHECK(r.pivots == std::vector<int>{1});
    CHECK(r.r.row(0) == Vec{rat(1), rat(1)});
  }
  SUBCASE("two rows, priority 2,0,1") {
    RrefResult r = rref_with_column_priority(make({{1, 0, 2}, {0, 1, 3}}, 3), {2, 0, 1});
    CHECK(r.pivots == std::vector<int>{2, 0});
    CHECK(r.r.row(0) == Vec{rat(0), rat(1, 3), rat(1)});
    CHECK(r.r.row(1) == Vec{rat(1), rat(-2, 3), rat(0)});
  }
  SUBCASE("natural priority reduces to plain rref") {
    Mat m = make({{0, 1, 3}, {1, 0, 2}}, 3);
    RrefResult a = rref_with_column_priority(m, {0, 1, 2});
    RrefResult b = rref(m);
    CHECK(a.r == b.r);
    CHECK(a.pivots == b.pivots);
  }
}

TEST_CASE("column priority agrees with the permute-reduce-unpermute oracle") {
  testgen::Rng rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(trial % 4);
    int cols = 2 + static_cast<int>(trial % 5);
    Mat m = testgen::random_mat(rng, rows, cols);
    std::vector<int> priority(static_cast<std::size_t>(cols));
    std::iota(priority.begin(), priority.end(), 0);
    std::shuffle(priority.begin(), priority.end(), rng);

    RrefResult got = rref_with_column_priority(m, priority);
    RrefResult want = priority_oracle(m, priority);
    CHECK(got.r == want.r);
    CHECK(got.pivots == want.pivots);
    CHECK(got.rank == want.rank);
  }
}

TEST_CASE("rref_with_column_priority rejects non-permutations") {
  Mat m = make({{1, 2}}, 2);
  CHECK_THROWS_AS(rref_with_column_priority(m, {0}), std::invalid_argument);
  CHECK_THROWS_AS(rref_with_column_priority(m, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(rref_with_column_priority(m, {0, 2}), std::invalid_argument);
}

TEST_CASE("kernel_basis: frozen example") {
  std::vector<Vec> k = kernel_basis(make({{1, 1, 0}}, 3));
  REQUIRE(k.size() == 2);
  CHECK(k[0] == Vec{rat(-1), rat(1), rat(0)});
  CHECK(k[1] == Vec{rat(0), rat(0), rat(1)});
}

TEST_CASE("kernel_basis spans the kernel exactly") {
  testgen::Rng rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    Mat m = testgen::random_mat(rng, 2, 4);
    std::vector<Vec> k = kernel_basis(m);
    CHECK(static_cast<int>(k.size()) == 4 - rref(m).rank);
    for (const Vec& v : k) CHECK(is_zero_vec(mat_vec(m, v)));
    // Independence: the kernel vectors reduce to full rank.
    CHECK(rref(Mat::from_rows(k, 4)).rank == static_cast<int>(k.size()));
  }
}

TEST_CASE("kernel of an invertible matrix is trivial") {
  CHECK(kernel_basis(Mat::identity(3)).empty());
  CHECK(kernel_basis(Mat(0, 3)).size() == 3);  // no constraints: full kernel
}

TEST_CASE("member solves for coordinates in the row space") {
  Mat basis = make({{1, -1, 0}}, 3);
  auto c = member(basis, Vec{rat(2), rat(-2), rat(0)});
  REQUIRE(c.has_value());
  CHECK(*c == Vec{rat(2)});
  CHECK(!member(basis, Vec{rat(1), rat(0), rat(0)}).has_value());

  Mat two = make({{1, 0, 2}, {0, 1, 3}}, 3);
  auto d = member(two, Vec{rat(1), rat(1), rat(5)});
  REQUIRE(d.has_value());
  CHECK(*d == Vec{rat(1), rat(1)});
}

TEST_CASE("member reconstructs the vector from its coefficients") {
  testgen::Rng rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    Mat basis = testgen::random_mat(rng, 2, 4);
    Vec c0 = testgen::random_vec(rng, 2);
    Vec v(4, Rat(0));
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 4; ++c) v[c] += c0[r] * basis.at(r, c);
    auto c = member(basis, v);
    REQUIRE(c.has_value());
    Vec back(4, Rat(0));
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 4; ++col) back[col] += (*c)[r] * basis.at(r, col);
    CHECK(back == v);
  }
}

TEST_CASE("transposed and row utilities") {
  Mat m = make({{1, 2, 3}, {4, 5, 6}}, 3);
  Mat t = m.transposed();
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  CHECK(t.at(2, 1) == 6);
  CHECK(t.transposed() == m);

  m.swap_rows(0, 1);
  CHECK(m.row(0) == Vec{rat(4), rat(5), rat(6)});
  CHECK(m.row_list().size() == 2);
}
