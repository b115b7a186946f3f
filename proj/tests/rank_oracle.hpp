#pragma once

// Test-only rank oracle, independent of the elimination code under test:
// the rank of a matrix over F_p is the size of its largest square submatrix
// with nonzero determinant, and determinants are evaluated by Laplace
// expansion. Exponential cost; only for tiny matrices.

#include <vector>

#include "sv/modlinalg.hpp"

namespace svtest {

inline std::uint64_t det_laplace(const sv::FpMatrix& m, const std::vector<std::size_t>& rows,
                                 std::vector<std::size_t> cols) {
  const sv::PrimeField& f = m.field();
  if (rows.size() == 1) return m(rows[0], cols[0]);

  std::uint64_t det = 0;
  const std::size_t r0 = rows[0];
  const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const std::uint64_t a = m(r0, cols[j]);
    if (a == 0) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t jj = 0; jj < cols.size(); ++jj) {
      if (jj != j) sub_cols.push_back(cols[jj]);
    }
    const std::uint64_t minor = det_laplace(m, sub_rows, sub_cols);
    const std::uint64_t term = f.mul(a, minor);
    det = (j % 2 == 0) ? f.add(det, term) : f.sub(det, term);
  }
  return det;
}

inline bool has_nonzero_minor(const sv::FpMatrix& m, std::size_t k,
                              std::vector<std::size_t>& rows, std::vector<std::size_t>& cols,
                              std::size_t row_from, std::size_t col_from, bool pick_rows) {
  if (pick_rows) {
    if (rows.size() == k) return has_nonzero_minor(m, k, rows, cols, 0, 0, false);
    for (std::size_t r = row_from; r + (k - rows.size()) <= m.rows(); ++r) {
      rows.push_back(r);
      if (has_nonzero_minor(m, k, rows, cols, r + 1, 0, true)) return true;
      rows.pop_back();
    }
    return false;
  }
  if (cols.size() == k) return det_laplace(m, rows, cols) != 0;
  for (std::size_t c = col_from; c + (k - cols.size()) <= m.cols(); ++c) {
    cols.push_back(c);
    if (has_nonzero_minor(m, k, rows, cols, 0, c + 1, false)) return true;
    cols.pop_back();
  }
  return false;
}

inline sv::i64 minor_rank(const sv::FpMatrix& m) {
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = kmax; k >= 1; --k) {
    std::vector<std::size_t> rows, cols;
    if (has_nonzero_minor(m, k, rows, cols, 0, 0, true)) return static_cast<sv::i64>(k);
  }
  return 0;
}

}  // namespace svtest
