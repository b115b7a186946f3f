#pragma once

#include <cstdint>
#include <vector>

#include "sv/combinat.hpp"
#include "sv/config.hpp"
#include "sv/modlinalg.hpp"

namespace sv {

// One point of the multiprojective space, chart-normalized: block i holds
// the n_i + 1 coordinates of the i-th factor and its 0-th coordinate is 1,
// so the point lies in the chart where no x_{0,i} vanishes.
struct PointTuple {
  std::vector<std::vector<std::uint64_t>> blocks;

  bool operator==(const PointTuple&) const = default;
};

// Concatenation of the blocks, matching the variable order of
// flatten_exponents.
std::vector<std::uint64_t> flatten_coords(const PointTuple& pt);

// A collection of pairwise-distinct points, all simple (multiplicity 1) or
// all double (multiplicity 2). A double point imposes vanishing of a form
// together with all its first partials.
struct FatPointScheme {
  Shape shape;
  std::vector<PointTuple> points;
  int multiplicity;  // 1 or 2
  PrimeField field;
};

// s pairwise-distinct random chart-normalized points, fully determined by
// the seed. Resamples on collision; after 100 consecutive collisions the
// field is considered pathologically small and this throws.
FatPointScheme sample_scheme(const Shape& shape, int s, int multiplicity,
                             std::uint64_t seed, const PrimeField& field);

// The vanishing-conditions matrix of the scheme in the given multidegree.
// Columns follow enumerate_monomials. For multiplicity 2 each point
// contributes one row per variable x_{j,i} (points in order, factors in
// order, variables in order): the row of partials d/dx_{j,i} evaluated at
// the point. For multiplicity 1 each point contributes its evaluation row.
// The per-factor Euler relations make the n+t derivative rows of one double
// point span the same space as value plus affine partials, with rank capped
// at n+1.
FpMatrix conditions_matrix(const FatPointScheme& scheme, const Multidegree& degree,
                           std::size_t size_cap = kDefaultSizeCap);

// Value of the Hilbert function of s generic fat points at the given
// multidegree: the rank of the conditions matrix over fresh random points,
// maximized over independent trials. Always a lower bound for the generic
// value, and equal to it with overwhelming probability. If the configured
// trials disagree, one extra trial is run; all per-trial ranks are reported.
RankResult hilbert_function(const Shape& shape, int s, int multiplicity,
                            const Multidegree& degree, const RunConfig& config);

}  // namespace sv
