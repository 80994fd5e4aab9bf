#pragma once

#include <vector>

#include "arr/scalar.hpp"

namespace arr {

using Row = std::vector<Scalar>;

/// Dense matrix over one coefficient field. Only what the lattice and
/// matroid computations need: reduced row echelon form, rank, span tests.
struct Matrix {
  std::vector<Row> rows;
  int cols = 0;

  int row_count() const { return static_cast<int>(rows.size()); }
  bool operator==(const Matrix& o) const { return cols == o.cols && rows == o.rows; }
};

/// In-place reduction to the canonical RREF (pivots 1, zeros above and
/// below, zero rows dropped). Returns the rank.
int rref(Matrix& m);

int rank_of(Matrix m);

/// Reduces v against an RREF matrix; returns the residue.
Row reduce_against(const Matrix& rr, Row v);

bool in_row_span(const Matrix& rr, const Row& v);

Matrix stacked(const Matrix& top, const Matrix& bottom);

}  // namespace arr
