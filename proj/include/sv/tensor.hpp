#pragma once

#include <cstdint>
#include <vector>

#include "sv/combinat.hpp"
#include "sv/config.hpp"
#include "sv/fatpoints.hpp"
#include "sv/modlinalg.hpp"

namespace sv {

// A dense tensor with a = a_1 + ... + a_t index positions: the first a_1
// indices range over [0, n_1], the next a_2 over [0, n_2], and so on.
// Entries are stored fully, redundantly across symmetric positions, so the
// symmetry check below is a genuine test rather than a tautology.
struct PartialSymTensor {
  Shape shape;
  Multidegree degree;
  PrimeField field;
  std::vector<int> axis_dims;  // n_i + 1, repeated a_i times
  std::vector<std::uint64_t> entries;  // row-major over the index tuple

  std::size_t order() const { return axis_dims.size(); }  // a
  std::size_t flat_index(const std::vector<int>& idx) const;
  std::uint64_t at(const std::vector<int>& idx) const { return entries[flat_index(idx)]; }
};

// v_1^(x a_1) (x) ... (x) v_t^(x a_t): entry at an index tuple is the
// product of the chosen vector coordinates. Vector i must have length
// n_i + 1 and be nonzero.
PartialSymTensor rank1_tensor(const std::vector<std::vector<std::uint64_t>>& vectors,
                              const Shape& shape, const Multidegree& degree,
                              const PrimeField& field,
                              std::size_t size_cap = kDefaultSizeCap);

// True iff every transposition of two index positions within the same
// block fixes every entry. Adjacent transpositions within blocks generate
// the whole block symmetric groups, so only those are checked.
bool is_partially_symmetric(const PartialSymTensor& tensor);

// Entrywise sum; shapes, degrees and fields must match.
PartialSymTensor add(const PartialSymTensor& lhs, const PartialSymTensor& rhs);

struct EmbeddedPoint {
  std::vector<std::uint64_t> veronese_coords;  // indexed by enumerate_monomials
  PartialSymTensor tensor;
};

// The two coordinate systems of the embedded point: the monomial evaluations
// and the rank-1 tensor of the point's blocks. Every tensor entry equals the
// veronese coordinate of the monomial matching its per-block index content.
EmbeddedPoint embed_point(const PointTuple& pt, const VarietySpec& spec,
                          const PrimeField& field,
                          std::size_t size_cap = kDefaultSizeCap);

// Rank of the matrix obtained by grouping the given index positions as rows
// and the remaining positions as columns. `row_axes` must be a nonempty
// proper subset of the positions.
i64 flattening_rank(const PartialSymTensor& tensor, const std::vector<int>& row_axes);

}  // namespace sv
