#include "arr/matrix.hpp"

#include <algorithm>

namespace arr {

int rref(Matrix& m) {
  int rank = 0;
  int nrows = m.row_count();
  for (int col = 0; col < m.cols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r) {
      if (!m.rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m.rows[rank], m.rows[pivot]);
    Scalar inv = m.rows[rank][col].inverse();
    for (int c = col; c < m.cols; ++c) m.rows[rank][c] = m.rows[rank][c] * inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || m.rows[r][col].is_zero()) continue;
      Scalar factor = m.rows[r][col];
      for (int c = col; c < m.cols; ++c)
        m.rows[r][c] = m.rows[r][c] - factor * m.rows[rank][c];
    }
    ++rank;
  }
  m.rows.resize(rank);
  return rank;
}

int rank_of(Matrix m) { return rref(m); }

Row reduce_against(const Matrix& rr, Row v) {
  for (const Row& row : rr.rows) {
    int lead = -1;
    for (int c = 0; c < rr.cols; ++c) {
      if (!row[c].is_zero()) {
        lead = c;
        break;
      }
    }
    if (lead < 0) continue;
    if (!v[lead].is_zero()) {
      Scalar factor = v[lead];
      for (int c = lead; c < rr.cols; ++c) v[c] = v[c] - factor * row[c];
    }
  }
  return v;
}

bool in_row_span(const Matrix& rr, const Row& v) {
  Row res = reduce_against(rr, v);
  return std::all_of(res.begin(), res.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix stacked(const Matrix& top, const Matrix& bottom) {
  Matrix m = top;
  m.rows.insert(m.rows.end(), bottom.rows.begin(), bottom.rows.end());
  return m;
}

}  // namespace arr
