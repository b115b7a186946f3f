#include "sv/fatpoints.hpp"

#include <algorithm>
#include <stdexcept>

#include "condition_rows.hpp"

namespace sv {

std::vector<std::uint64_t> flatten_coords(const PointTuple& pt) {
  std::vector<std::uint64_t> flat;
  std::size_t total = 0;
  for (const auto& b : pt.blocks) total += b.size();
  flat.reserve(total);
  for (const auto& b : pt.blocks) flat.insert(flat.end(), b.begin(), b.end());
  return flat;
}

FatPointScheme sample_scheme(const Shape& shape, int s, int multiplicity,
                             std::uint64_t seed, const PrimeField& field) {
  if (s < 1) throw std::invalid_argument("need at least one point");
  if (multiplicity != 1 && multiplicity != 2) {
    throw std::invalid_argument("multiplicity must be 1 or 2");
  }

  SplitMix64 rng(seed);
  FatPointScheme scheme{shape, {}, multiplicity, field};
  scheme.points.reserve(static_cast<std::size_t>(s));

  for (int j = 0; j < s; ++j) {
    int attempts = 0;
    while (true) {
      PointTuple pt;
      pt.blocks.reserve(static_cast<std::size_t>(shape.count()));
      for (int i = 0; i < shape.count(); ++i) {
        std::vector<std::uint64_t> block(static_cast<std::size_t>(shape.factors[i]) + 1);
        block[0] = 1;
        for (std::size_t k = 1; k < block.size(); ++k) {
          block[k] = random_field_element(rng, field);
        }
        pt.blocks.push_back(std::move(block));
      }
      const bool fresh =
          std::find(scheme.points.begin(), scheme.points.end(), pt) == scheme.points.end();
      if (fresh) {
        scheme.points.push_back(std::move(pt));
        break;
      }
      if (++attempts >= 100) {
        throw Error("100 consecutive point collisions; field too small for this sample");
      }
    }
  }
  return scheme;
}

FpMatrix conditions_matrix(const FatPointScheme& scheme, const Multidegree& degree,
                           std::size_t size_cap) {
  const Shape& shape = scheme.shape;
  if (shape.count() != degree.count()) {
    throw std::invalid_argument("shape and degree lengths differ");
  }

  const auto monomials = enumerate_monomials(shape, degree, size_cap);
  std::vector<std::vector<int>> col_exponents;
  col_exponents.reserve(monomials.size());
  for (const auto& m : monomials) col_exponents.push_back(flatten_exponents(m));

  const std::size_t nvars = static_cast<std::size_t>(shape.total_dim() + shape.count());
  const std::size_t rows_per_point = scheme.multiplicity == 2 ? nvars : 1;
  FpMatrix m(scheme.field, scheme.points.size() * rows_per_point, monomials.size());

  for (std::size_t p = 0; p < scheme.points.size(); ++p) {
    detail::write_condition_rows(m, p * rows_per_point, col_exponents,
                                 flatten_coords(scheme.points[p]), scheme.multiplicity);
  }
  return m;
}

RankResult hilbert_function(const Shape& shape, int s, int multiplicity,
                            const Multidegree& degree, const RunConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("need at least one trial");
  const PrimeField field(config.prime);

  RankResult result;
  result.prime = config.prime;
  result.seed = config.seed;

  auto run_trial = [&](int trial) {
    const auto scheme =
        sample_scheme(shape, s, multiplicity, derive_seed(config.seed, trial), field);
    return rank(conditions_matrix(scheme, degree, config.size_cap));
  };

  for (int t = 0; t < config.trials; ++t) {
    result.per_trial_ranks.push_back(run_trial(t));
  }
  const auto [lo, hi] =
      std::minmax_element(result.per_trial_ranks.begin(), result.per_trial_ranks.end());
  if (*lo != *hi) {
    // tie-break with one extra independent draw
    result.per_trial_ranks.push_back(run_trial(config.trials));
  }
  result.trials = static_cast<int>(result.per_trial_ranks.size());
  result.rank = *std::max_element(result.per_trial_ranks.begin(), result.per_trial_ranks.end());
  return result;
}

}  // namespace sv
