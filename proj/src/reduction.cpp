#include "sv/reduction.hpp"

#include <stdexcept>

#include "condition_rows.hpp"

namespace sv {

ProjectedPoint project_point(const PointTuple& pt) {
  ProjectedPoint out;
  std::size_t n = 0;
  for (const auto& b : pt.blocks) {
    if (b.empty() || b[0] != 1) {
      throw std::invalid_argument("point is not chart-normalized");
    }
    n += b.size() - 1;
  }
  out.coords.reserve(n + 1);
  out.coords.push_back(1);
  for (const auto& b : pt.blocks) {
    out.coords.insert(out.coords.end(), b.begin() + 1, b.end());
  }
  return out;
}

ClaimBasis claim_basis(const Shape& shape, const Multidegree& degree,
                       std::size_t size_cap) {
  if (shape.count() != degree.count()) {
    throw std::invalid_argument("shape and degree lengths differ");
  }
  for (int a : degree.degrees) {
    if (a < 1) throw std::invalid_argument("claim basis needs all degrees >= 1");
  }

  const auto monomials = enumerate_monomials(shape, degree, size_cap);
  const int t = shape.count();
  const std::size_t nvars = static_cast<std::size_t>(shape.total_dim()) + 1;

  ClaimBasis basis;
  basis.monomials.reserve(monomials.size());
  basis.source_degrees.reserve(monomials.size());

  // Dehomogenize each factor (drop x_{0,i}) and homogenize with z_0: the
  // z_0-exponent is the sum of the dropped x_{0,i}-exponents, so the image
  // of the k-th multigraded monomial sits at position k.
  for (const auto& m : monomials) {
    std::vector<int> z(nvars, 0);
    std::vector<int> src(static_cast<std::size_t>(t), 0);
    std::size_t pos = 1;
    for (int i = 0; i < t; ++i) {
      const auto& row = m.exponents[static_cast<std::size_t>(i)];
      z[0] += row[0];
      for (std::size_t j = 1; j < row.size(); ++j) z[pos++] = row[j];
      src[static_cast<std::size_t>(i)] = degree.degrees[static_cast<std::size_t>(i)] - row[0];
    }
    basis.monomials.push_back(std::move(z));
    basis.source_degrees.push_back(std::move(src));
  }
  return basis;
}

FpMatrix reduced_conditions_matrix(const Shape& shape, const Multidegree& degree,
                                   const std::vector<PointTuple>& points, int multiplicity,
                                   const PrimeField& field, std::size_t size_cap) {
  if (multiplicity != 1 && multiplicity != 2) {
    throw std::invalid_argument("multiplicity must be 1 or 2");
  }
  const ClaimBasis basis = claim_basis(shape, degree, size_cap);
  const std::size_t nvars = static_cast<std::size_t>(shape.total_dim()) + 1;
  const std::size_t rows_per_point = multiplicity == 2 ? nvars : 1;

  FpMatrix m(field, points.size() * rows_per_point, basis.monomials.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    detail::write_condition_rows(m, p * rows_per_point, basis.monomials,
                                 project_point(points[p]).coords, multiplicity);
  }
  return m;
}

EquivalenceCheck check_method_equivalence(const Shape& shape, const Multidegree& degree,
                                          int s, int multiplicity, const RunConfig& config) {
  const PrimeField field(config.prime);
  const auto scheme =
      sample_scheme(shape, s, multiplicity, derive_seed(config.seed, 0), field);

  EquivalenceCheck out;
  out.direct_rank = rank(conditions_matrix(scheme, degree, config.size_cap));
  out.reduced_rank = rank(reduced_conditions_matrix(shape, degree, scheme.points,
                                                    multiplicity, field, config.size_cap));
  out.agree = out.direct_rank == out.reduced_rank;
  return out;
}

}  // namespace sv
