#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sv/combinat.hpp"
#include "sv/config.hpp"
#include "sv/modlinalg.hpp"

namespace sv {

// A degree splitting a = b + c such that forms of degree b and of degree c
// both pass through the s sampled simple points. Their product then vanishes
// doubly on all of them; when the secant variety was expected to fill the
// ambient space this exhibits an unexpected section, hence a defect. When
// the expected dimension is below the ambient one the splitting is reported
// anyway but proves nothing, and proves_defect is false.
struct SplitCertificate {
  Multidegree b;
  Multidegree c;
  i64 dim_Ib = 0;  // forms of degree b through the points
  i64 dim_Ic = 0;
  bool proves_defect = false;

  bool operator==(const SplitCertificate&) const = default;
};

// Everything about one secant-dimension computation. dim_actual is the
// Hilbert-function value minus one; it is a probabilistic lower bound for
// the true dimension, so the reported defect is exact or overcounted, never
// undercounted.
struct SecantReport {
  VarietySpec spec;
  int s = 1;
  i64 hilbert = 0;
  i64 dim_actual = 0;    // hilbert - 1
  i64 dim_expected = 0;  // min{N, s n + s - 1}
  i64 defect = 0;        // dim_expected - dim_actual
  Method method = Method::both;
  std::optional<SplitCertificate> certificate;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<i64> per_trial_ranks;

  bool operator==(const SecantReport&) const = default;
};

// Grassmann analysis of (k, s-1)-planes through the variety, computed via
// the product trick: appending a degree-1 P^k factor turns the Grassmann
// defect into the ordinary secant defect of the product variety.
struct GrassmannReport {
  VarietySpec base;
  int k = 0;
  int s = 1;
  VarietySpec product;  // base with an extra P^k factor of degree 1 (k >= 1)
  i64 dim_expected = 0;
  i64 dim_actual = 0;
  i64 product_defect = 0;
  i64 defect = 0;  // equals product_defect
  SecantReport product_report;

  bool operator==(const GrassmannReport&) const = default;
};

// Computes dim of the s-th secant variety with the configured method(s).
// Method::both runs the two constructions on the same points every trial
// and throws MethodDisagreementError if they ever differ. On a positive
// defect a split certificate is searched for and attached when found.
SecantReport secant_dimension(const VarietySpec& spec, int s, const RunConfig& config);

// Enumerates the splittings b + c = degree with b, c nonzero (up to swap)
// and returns the first whose two simple-point ideal pieces are both
// nonempty, measured by independent rank computations. Empty optional when
// no splitting works.
std::optional<SplitCertificate> find_split_certificate(const VarietySpec& spec, int s,
                                                       const RunConfig& config);

// Requires s >= k + 1. k = 0 degenerates to secant_dimension.
GrassmannReport grassmann_secant_dimension(const VarietySpec& spec, int k, int s,
                                           const RunConfig& config);

struct Classification {
  i64 dim = 0;
  i64 defect = 0;

  bool operator==(const Classification&) const = default;
};

// Known answer for P^1 x P^1 with degree (a1, a2) (swapped to a1 >= a2):
// the expected dimension except for a1 = 2d, a2 = 2, s = 2d + 1, where the
// dimension is 3s - 2 (defect 1).
Classification classify_p1xp1(int a1, int a2, int s);

// Known answer for P^1 x P^1 x P^1 (degrees sorted descending): expected
// except (2,2,2) at s = 7 (defect 2) and (2a,1,1) at s = 2a + 1 (defect 1).
Classification classify_p1cubed(int a1, int a2, int a3, int s);

// One member of the catalogue of defective families.
struct DefectiveExample {
  int family = 0;  // 1-based id
  std::string name;
  Shape shape;
  Multidegree degree;
  int s = 1;
  Multidegree split_b;
  Multidegree split_c;
  // False only for the anomalous 4-fold Segre case (family 9 at m = 1),
  // whose defect is of a different kind: its expected dimension does not
  // fill the ambient space, so the splitting proves nothing there.
  bool certificate_expected = true;
};

// Instantiates one of the ten defective families at concrete parameters;
// throws std::domain_error outside the family's stated range. Families use
// only the parameters they mention.
DefectiveExample defective_family_instance(int family, int m, int k, int r);

// All families that accept the given parameters, in family order.
std::vector<DefectiveExample> defective_example_table(int m, int k, int r);

// Checks that s points in general position impose independent conditions
// when s <= min_i n_i + 1: the computed dimension must be exactly
// s(n+1) - 1. Factors are sorted ascending (degrees permuted alongside);
// the two-factor degree (1,1) case is excluded and rejected.
bool small_s_expected_dimension(const Shape& shape, const Multidegree& degree, int s,
                                const RunConfig& config);

}  // namespace sv
