#pragma once

#include <cstdint>
#include <vector>

#include "sv/combinat.hpp"
#include "sv/config.hpp"
#include "sv/fatpoints.hpp"
#include "sv/modlinalg.hpp"

namespace sv {

// The same fat-point computation can be carried out inside a single
// projective space P^n, n = n_1 + ... + n_t: map each chart-normalized
// point tuple to (1, x_{1,1}, ..., x_{n_t,t}) and restrict degree-a forms
// (a = a_1 + ... + a_t) to the monomials whose factor-block degrees stay
// within the multidegree. The fat coordinate subspaces that force this
// restriction never need to be materialized; the restricted monomial basis
// is exactly their ideal in degree a, and the two condition matrices have
// equal rank on identical point sets.

// A point of P^n in the z_0 = 1 chart.
struct ProjectedPoint {
  std::vector<std::uint64_t> coords;  // length n + 1, coords[0] == 1

  bool operator==(const ProjectedPoint&) const = default;
};

// The restricted degree-a monomial basis of P^n. Monomial k is an exponent
// vector over (z_0, z_{1,1}, ..., z_{n_t,t}); source_degrees[k] records the
// degree s_i it carries in each factor's variables, with s_i <= a_i and
// z_0-exponent a - sum s_i. Position k corresponds to the k-th multigraded
// monomial of enumerate_monomials.
struct ClaimBasis {
  std::vector<std::vector<int>> monomials;
  std::vector<std::vector<int>> source_degrees;
};

// (1, x_{1,1}, ..., x_{n_t,t}): with chart normalization, dropping each
// block's leading 1 and concatenating is the whole map.
ProjectedPoint project_point(const PointTuple& pt);

// Requires all degree entries >= 1.
ClaimBasis claim_basis(const Shape& shape, const Multidegree& degree,
                       std::size_t size_cap = kDefaultSizeCap);

// Conditions matrix over the claim basis: per point, all n + 1 partial
// derivative rows d/dz_0, d/dz_{j,i} at the projected point (multiplicity
// 2), or a single evaluation row (multiplicity 1).
FpMatrix reduced_conditions_matrix(const Shape& shape, const Multidegree& degree,
                                   const std::vector<PointTuple>& points, int multiplicity,
                                   const PrimeField& field,
                                   std::size_t size_cap = kDefaultSizeCap);

struct EquivalenceCheck {
  bool agree = false;
  i64 direct_rank = 0;
  i64 reduced_rank = 0;
};

// Samples one scheme and runs both matrix constructions on the same points.
// The ranks must agree for every input; a disagreement is returned, never
// resolved silently.
EquivalenceCheck check_method_equivalence(const Shape& shape, const Multidegree& degree,
                                          int s, int multiplicity, const RunConfig& config);

}  // namespace sv
