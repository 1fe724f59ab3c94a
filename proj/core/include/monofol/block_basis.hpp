#pragma once

#include <vector>

#include "monofol/subspace.hpp"

namespace monofol {

struct BlockRow {
  int pivot = 0;  // pivot column; entry 1 there, 0 at every other pivot column
  Vec row;        // full ambient-length vector

  bool operator==(const BlockRow&) const = default;
};

// Basis of V adapted to a partition I1 | I2, from elimination with I1
// columns prioritized. First-kind rows pivot in I1, second-kind rows pivot
// in I2 and vanish on all of I1. With the columns sorted pivots-first on
// each side this is the block matrix [Id A | 0 B ; 0 0 | Id C].
//
// lemma_gap records when some first-kind row has a nonzero A-part, the
// situation where no basis of V can consist of vectors of the shape
// e_i + (I2 part): the adapted basis below is still honest, but the
// A-discarding construction of paper_basis() leaves V.
struct BlockBasis {
  int ambient = 0;
  IndexSet i1, i2;
  std::vector<int> i1_pivots, i2_pivots;  // ascending
  std::vector<BlockRow> first_kind;       // pivots in i1, ascending
  std::vector<BlockRow> second_kind;      // pivots in i2, ascending
  bool lemma_gap = false;

  int k1() const { return static_cast<int>(first_kind.size()); }
  int k2() const { return static_cast<int>(second_kind.size()); }

  // Restrictions as full-length vectors, zero outside their support.
  Vec a_part(const BlockRow& r) const;  // non-pivot I1 columns
  Vec b_part(const BlockRow& r) const;  // non-pivot I2 columns
  Vec c_part(const BlockRow& r) const;  // non-pivot I2 columns

  std::vector<Vec> all_rows() const;  // first kind then second kind
};

// Throws std::invalid_argument unless i1, i2 partition {0..ambient-1}.
BlockBasis block_basis(const Subspace& v, const IndexSet& i1, const IndexSet& i2);

// The proof-style vectors: e_pivot + B-part for each first-kind row (A-part
// discarded), second-kind rows unchanged. Every vector lies in V exactly
// when lemma_gap is false.
std::vector<Vec> paper_basis(const BlockBasis& b);

}  // namespace monofol
