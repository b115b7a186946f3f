#pragma once

// Internal helper shared by the two conditions-matrix builders: writes, for
// one point, either the evaluation row of every column monomial (simple
// point) or all first-order partial-derivative rows (double point).

#include <cstdint>
#include <vector>

#include "sv/modlinalg.hpp"

namespace sv::detail {

// `col_exponents[c]` is the exponent vector of column c over the same
// variable list as `coords`. Multiplicity 1 writes one row at `first_row`;
// multiplicity 2 writes coords.size() rows, one per variable, in order.
inline void write_condition_rows(FpMatrix& m, std::size_t first_row,
                                 const std::vector<std::vector<int>>& col_exponents,
                                 const std::vector<std::uint64_t>& coords,
                                 int multiplicity) {
  const PrimeField& f = m.field();
  const std::size_t nvars = coords.size();
  std::vector<std::uint64_t> prefix(nvars + 1), suffix(nvars + 1);

  for (std::size_t c = 0; c < col_exponents.size(); ++c) {
    const std::vector<int>& e = col_exponents[c];
    prefix[0] = 1;
    for (std::size_t k = 0; k < nvars; ++k) {
      prefix[k + 1] = f.mul(prefix[k], f.pow(coords[k], static_cast<std::uint64_t>(e[k])));
    }
    if (multiplicity == 1) {
      m(first_row, c) = prefix[nvars];
      continue;
    }
    suffix[nvars] = 1;
    for (std::size_t k = nvars; k-- > 0;) {
      suffix[k] = f.mul(suffix[k + 1], f.pow(coords[k], static_cast<std::uint64_t>(e[k])));
    }
    for (std::size_t k = 0; k < nvars; ++k) {
      std::uint64_t val = 0;
      if (e[k] > 0) {
        // e_k * x_k^(e_k - 1) * (product of the other variable powers)
        val = f.mul(static_cast<std::uint64_t>(e[k]) % f.modulus(),
                    f.pow(coords[k], static_cast<std::uint64_t>(e[k] - 1)));
        val = f.mul(val, f.mul(prefix[k], suffix[k + 1]));
      }
      m(first_row + k, c) = val;
    }
  }
}

}  // namespace sv::detail
