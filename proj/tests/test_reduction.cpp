#include <doctest.h>

#include <array>
#include <set>

#include "rank_oracle.hpp"
#include "sv/fatpoints.hpp"
#include "sv/reduction.hpp"

using namespace sv;

namespace {

RunConfig test_config(std::uint64_t seed) {
  RunConfig cfg;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("projection concatenates the chart coordinates") {
  CHECK(project_point(PointTuple{{{1, 4}, {1, 9}}}).coords ==
        std::vector<std::uint64_t>{1, 4, 9});
  CHECK(project_point(PointTuple{{{1, 1}, {1, 1}}}).coords ==
        std::vector<std::uint64_t>{1, 1, 1});
  CHECK(project_point(PointTuple{{{1, 2, 3}, {1, 5}}}).coords ==
        std::vector<std::uint64_t>{1, 2, 3, 5});
  CHECK_THROWS_AS(project_point(PointTuple{{{2, 4}}}), std::invalid_argument);
}

TEST_CASE("projection is injective on distinct chart points") {
  const PrimeField f;
  const auto scheme = sample_scheme(Shape({1, 2, 1}), 12, 1, 3, f);
  std::set<std::vector<std::uint64_t>> images;
  for (const auto& pt : scheme.points) images.insert(project_point(pt).coords);
  CHECK(images.size() == scheme.points.size());
}

TEST_CASE("claim basis for the Segre quadric") {
  const ClaimBasis basis = claim_basis(Shape({1, 1}), Multidegree({1, 1}));
  REQUIRE(basis.monomials.size() == 4);
  // positions follow the multigraded order x0y0, x0y1, x1y0, x1y1
  CHECK(basis.monomials[0] == std::vector<int>{2, 0, 0});  // z0^2
  CHECK(basis.monomials[1] == std::vector<int>{1, 0, 1});  // z0 z_{1,2}
  CHECK(basis.monomials[2] == std::vector<int>{1, 1, 0});  // z0 z_{1,1}
  CHECK(basis.monomials[3] == std::vector<int>{0, 1, 1});  // z_{1,1} z_{1,2}
  CHECK(basis.source_degrees[0] == std::vector<int>{0, 0});
  CHECK(basis.source_degrees[3] == std::vector<int>{1, 1});
}

TEST_CASE("claim basis cardinality and per-monomial degrees") {
  CHECK(claim_basis(Shape({1, 1}), Multidegree({2, 2})).monomials.size() == 9);

  // one factor: the full space of binary forms of degree d
  const ClaimBasis line = claim_basis(Shape({1}), Multidegree({4}));
  REQUIRE(line.monomials.size() == 5);
  for (int j = 0; j <= 4; ++j) {
    CHECK(line.monomials[static_cast<std::size_t>(j)] == std::vector<int>{4 - j, j});
  }

  SplitMix64 rng(47);
  for (int iter = 0; iter < 25; ++iter) {
    const int t = 1 + static_cast<int>(rng.next() % 3);
    std::vector<int> factors, degrees;
    for (int i = 0; i < t; ++i) {
      factors.push_back(1 + static_cast<int>(rng.next() % 3));
      degrees.push_back(1 + static_cast<int>(rng.next() % 3));
    }
    const Shape shape(factors);
    const Multidegree degree(degrees);
    if (multidegree_dimension(shape, degree) > 5000) continue;

    const ClaimBasis basis = claim_basis(shape, degree);
    CHECK(static_cast<i64>(basis.monomials.size()) == multidegree_dimension(shape, degree));

    const int a = degree.total();
    for (std::size_t m = 0; m < basis.monomials.size(); ++m) {
      int total = 0;
      for (int e : basis.monomials[m]) total += e;
      CHECK(total == a);

      int src_total = 0;
      std::size_t pos = 1;
      for (int i = 0; i < t; ++i) {
        int si = 0;
        for (int j = 0; j < factors[static_cast<std::size_t>(i)]; ++j) si += basis.monomials[m][pos++];
        CHECK(si == basis.source_degrees[m][static_cast<std::size_t>(i)]);
        CHECK(si <= degrees[static_cast<std::size_t>(i)]);
        src_total += si;
      }
      CHECK(basis.monomials[m][0] == a - src_total);
    }
  }

  CHECK_THROWS_AS(claim_basis(Shape({1, 1}), Multidegree({1, 0})), std::invalid_argument);
}

TEST_CASE("simple-point rows agree across the two constructions") {
  const PrimeField f;
  const Shape shape({2, 1});
  const Multidegree degree({2, 2});
  const auto scheme = sample_scheme(shape, 4, 1, 19, f);

  const FpMatrix direct = conditions_matrix(scheme, degree);
  const FpMatrix reduced = reduced_conditions_matrix(shape, degree, scheme.points, 1, f);
  REQUIRE(direct.rows() == reduced.rows());
  REQUIRE(direct.cols() == reduced.cols());
  for (std::size_t r = 0; r < direct.rows(); ++r) {
    for (std::size_t c = 0; c < direct.cols(); ++c) CHECK(direct(r, c) == reduced(r, c));
  }
}

TEST_CASE("reduced matrix ranks") {
  const PrimeField f;
  const Shape shape({1, 1});
  const Multidegree degree({2, 2});

  const auto fat = sample_scheme(shape, 3, 2, 101, f);
  CHECK(rank(reduced_conditions_matrix(shape, degree, fat.points, 2, f)) == 8);

  const FpMatrix empty = reduced_conditions_matrix(shape, degree, {}, 2, f);
  CHECK(empty.rows() == 0);
  CHECK(rank(empty) == 0);

  const auto simple = sample_scheme(shape, 3, 1, 102, f);
  const FpMatrix m = reduced_conditions_matrix(shape, degree, simple.points, 1, f);
  CHECK(rank(m) == 3);
  CHECK(svtest::minor_rank(m) == 3);
}

TEST_CASE("the two routes compute the same rank") {
  CHECK(check_method_equivalence(Shape({1, 1}), Multidegree({2, 1}), 2, 2, test_config(1)).agree);
  CHECK(check_method_equivalence(Shape({2, 3}), Multidegree({1, 2}), 4, 2, test_config(2)).agree);

  const EquivalenceCheck eq =
      check_method_equivalence(Shape({1, 1, 1}), Multidegree({2, 1, 1}), 3, 2, test_config(3));
  CHECK(eq.agree);
  CHECK(eq.direct_rank == 11);

  SplitMix64 rng(2718);
  for (int iter = 0; iter < 25; ++iter) {
    const int t = 1 + static_cast<int>(rng.next() % 3);
    std::vector<int> factors, degrees;
    for (int i = 0; i < t; ++i) {
      factors.push_back(1 + static_cast<int>(rng.next() % 3));
      degrees.push_back(1 + static_cast<int>(rng.next() % 3));
    }
    const Shape shape(factors);
    const Multidegree degree(degrees);
    if (multidegree_dimension(shape, degree) > 2000) continue;
    const int s = 1 + static_cast<int>(rng.next() % 6);
    const int mult = 1 + static_cast<int>(rng.next() % 2);
    const EquivalenceCheck it =
        check_method_equivalence(shape, degree, s, mult, test_config(rng.next()));
    CHECK(it.agree);
  }
}

// On P^1 x P^1 the reduction lands in the plane, where the bookkeeping of
// passing between the two Hilbert functions is an exact binomial identity.
TEST_CASE("plane bookkeeping identity for two factors") {
  const PrimeField f;
  for (const auto& tc : std::vector<std::array<int, 3>>{
           {2, 2, 2}, {3, 1, 3}, {2, 1, 2}, {4, 2, 5}}) {
    const int a1 = tc[0], a2 = tc[1], s = tc[2];
    const Shape shape({1, 1});
    const Multidegree degree({a1, a2});
    const auto scheme = sample_scheme(shape, s, 2, 500 + static_cast<std::uint64_t>(a1), f);

    const i64 rank_direct = rank(conditions_matrix(scheme, degree));
    const i64 rank_reduced =
        rank(reduced_conditions_matrix(shape, degree, scheme.points, 2, f));

    const i64 ring = multidegree_dimension(shape, degree);  // (a1+1)(a2+1)
    const i64 plane_forms = binomial(a1 + a2 + 2, 2);       // dim of degree a1+a2 in P^2
    const i64 ideal_dim = ring - rank_reduced;
    const i64 hw = plane_forms - ideal_dim;
    CHECK(hw == rank_direct + binomial(a1 + 1, 2) + binomial(a2 + 1, 2));
  }
}
