#pragma once

#include <cstdint>
#include <vector>

#include "sv/config.hpp"
#include "sv/errors.hpp"

namespace sv {

using i64 = std::int64_t;

// Checked arithmetic helpers. Silent wraparound would corrupt every
// downstream rank, so overflow is always a hard error.
i64 checked_mul(i64 a, i64 b);
i64 checked_add(i64 a, i64 b);
i64 binomial(int n, int k);  // exact, throws std::overflow_error

// Shape of a product of projective spaces P^{n_1} x ... x P^{n_t}.
struct Shape {
  std::vector<int> factors;  // each n_i >= 1

  explicit Shape(std::vector<int> f);

  int count() const { return static_cast<int>(factors.size()); }  // t
  int total_dim() const;                                          // n = sum n_i

  bool operator==(const Shape&) const = default;
};

// A tuple of degrees (a_1, ..., a_t), one per factor. Entries may be zero
// (needed by degree splittings); embeddings additionally require all >= 1,
// which VarietySpec enforces.
struct Multidegree {
  std::vector<int> degrees;

  explicit Multidegree(std::vector<int> d);

  int count() const { return static_cast<int>(degrees.size()); }
  int total() const;  // a = sum a_i

  bool operator==(const Multidegree&) const = default;
};

// The pair (shape, degree) defining an embedded variety: the image of
// P^{n_1} x ... x P^{n_t} under the maps of multidegree (a_1, ..., a_t),
// living in P^N with N = prod C(n_i + a_i, n_i) - 1. Derived quantities are
// recomputed on demand, never stored.
struct VarietySpec {
  Shape shape;
  Multidegree degree;  // all entries >= 1

  VarietySpec(Shape s, Multidegree d);

  int variety_dim() const { return shape.total_dim(); }  // n
  i64 ring_dim() const;                                  // N + 1
  i64 ambient_dim() const { return ring_dim() - 1; }     // N

  bool operator==(const VarietySpec&) const = default;
};

// One monomial of multidegree (a_1, ..., a_t): for each factor, the
// exponents of its n_i + 1 homogeneous coordinates. Row i sums to a_i.
struct MultiMonomial {
  std::vector<std::vector<int>> exponents;

  bool operator==(const MultiMonomial&) const = default;
};

// Concatenation of the per-factor exponent rows, in factor order. This is
// the variable order used for matrix rows everywhere.
std::vector<int> flatten_exponents(const MultiMonomial& m);

// dim of the multidegree-a part of the multigraded coordinate ring,
// prod C(n_i + a_i, n_i). Exact; throws std::overflow_error rather than wrap.
i64 multidegree_dimension(const Shape& shape, const Multidegree& degree);

// All monomials of the given multidegree, each exactly once, in a fixed
// deterministic order: within each factor the exponent vectors are listed
// lexicographically descending, and the factor blocks are combined with the
// first factor varying slowest. Every matrix column index in this project
// refers to this order.
std::vector<MultiMonomial> enumerate_monomials(const Shape& shape,
                                               const Multidegree& degree,
                                               std::size_t size_cap = kDefaultSizeCap);

// min{N, s*n + s - 1}: the dimension the s-th secant variety of an
// n-dimensional variety in P^N has unless it is defective.
i64 expected_secant_dim(i64 N, int n, int s);

// min{s*n + (k+1)(s-k-1), (k+1)(N-k)}: the expected dimension of the variety
// of k-planes lying in spans of s points. Requires s >= k+1 (a k-plane needs
// at least k+1 spanning points).
i64 expected_grassmann_dim(i64 N, int n, int k, int s);

}  // namespace sv
