#include <doctest.h>

#include <algorithm>
#include <set>

#include "sv/combinat.hpp"
#include "sv/modlinalg.hpp"

using namespace sv;

TEST_CASE("multidegree dimension") {
  CHECK(multidegree_dimension(Shape({1, 1}), Multidegree({2, 2})) == 9);
  CHECK(multidegree_dimension(Shape({1, 1, 1}), Multidegree({2, 2, 2})) == 27);
  CHECK(multidegree_dimension(Shape({3, 2}), Multidegree({0, 0})) == 1);
  CHECK(multidegree_dimension(Shape({2, 3}), Multidegree({1, 2})) == 30);

  CHECK_THROWS_AS(multidegree_dimension(Shape({1, 1}), Multidegree({2})),
                  std::invalid_argument);
  // C(800, 400) does not fit in 64 bits
  CHECK_THROWS_AS(multidegree_dimension(Shape({400}), Multidegree({400})),
                  std::overflow_error);
}

TEST_CASE("type invariants are enforced") {
  CHECK_THROWS_AS(Shape({}), std::invalid_argument);
  CHECK_THROWS_AS(Shape({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Multidegree({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(VarietySpec(Shape({1, 1}), Multidegree({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(VarietySpec(Shape({1, 1}), Multidegree({1})), std::invalid_argument);

  const VarietySpec spec(Shape({1, 1}), Multidegree({2, 2}));
  CHECK(spec.ambient_dim() == 8);
  CHECK(spec.variety_dim() == 2);
  CHECK(spec.ambient_dim() >= spec.variety_dim());
}

TEST_CASE("monomial enumeration order") {
  const auto univariate = enumerate_monomials(Shape({1}), Multidegree({2}));
  REQUIRE(univariate.size() == 3);
  CHECK(univariate[0].exponents == std::vector<std::vector<int>>{{2, 0}});
  CHECK(univariate[1].exponents == std::vector<std::vector<int>>{{1, 1}});
  CHECK(univariate[2].exponents == std::vector<std::vector<int>>{{0, 2}});

  const auto bilinear = enumerate_monomials(Shape({1, 1}), Multidegree({1, 1}));
  REQUIRE(bilinear.size() == 4);
  // first factor varies slowest: x0*y0, x0*y1, x1*y0, x1*y1
  CHECK(bilinear[0].exponents == std::vector<std::vector<int>>{{1, 0}, {1, 0}});
  CHECK(bilinear[1].exponents == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  CHECK(bilinear[2].exponents == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(bilinear[3].exponents == std::vector<std::vector<int>>{{0, 1}, {0, 1}});

  CHECK(enumerate_monomials(Shape({2, 2}), Multidegree({2, 2})).size() == 36);

  CHECK_THROWS_AS(enumerate_monomials(Shape({2, 2}), Multidegree({2, 2}), 35),
                  CapExceededError);
}

TEST_CASE("enumeration is exhaustive, duplicate-free and deterministic") {
  SplitMix64 rng(91);
  for (int iter = 0; iter < 40; ++iter) {
    const int t = 1 + static_cast<int>(rng.next() % 3);
    std::vector<int> factors, degrees;
    for (int i = 0; i < t; ++i) {
      factors.push_back(1 + static_cast<int>(rng.next() % 3));
      degrees.push_back(static_cast<int>(rng.next() % 4));
    }
    const Shape shape(factors);
    const Multidegree degree(degrees);
    if (multidegree_dimension(shape, degree) > 10000) continue;

    const auto monos = enumerate_monomials(shape, degree);
    CHECK(static_cast<i64>(monos.size()) == multidegree_dimension(shape, degree));

    for (const auto& m : monos) {
      for (int i = 0; i < t; ++i) {
        int sum = 0;
        for (int e : m.exponents[static_cast<std::size_t>(i)]) sum += e;
        CHECK(sum == degrees[static_cast<std::size_t>(i)]);
      }
    }

    std::set<std::vector<int>> seen;
    for (const auto& m : monos) seen.insert(flatten_exponents(m));
    CHECK(seen.size() == monos.size());

    CHECK(enumerate_monomials(shape, degree) == monos);
  }
}

TEST_CASE("expected secant dimension") {
  CHECK(expected_secant_dim(8, 2, 3) == 8);
  CHECK(expected_secant_dim(26, 3, 7) == 26);
  CHECK(expected_secant_dim(100, 7, 1) == 7);
  CHECK(expected_secant_dim(14, 2, 5) == 14);

  // nondecreasing in s, and equal to N once s(n+1) >= N+1
  SplitMix64 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = 1 + static_cast<int>(rng.next() % 6);
    const i64 N = n + static_cast<i64>(rng.next() % 60);
    i64 prev = 0;
    for (int s = 1; s <= 40; ++s) {
      const i64 cur = expected_secant_dim(N, n, s);
      CHECK(cur >= prev);
      if (static_cast<i64>(s) * (n + 1) >= N + 1) CHECK(cur == N);
      prev = cur;
    }
  }
}

TEST_CASE("expected grassmann dimension") {
  CHECK(expected_grassmann_dim(5, 2, 1, 3) == 8);
  CHECK(expected_grassmann_dim(9, 2, 2, 3) == 6);
  // k = 0 reduces to the ordinary expected dimension
  CHECK(expected_grassmann_dim(8, 2, 0, 3) == expected_secant_dim(8, 2, 3));
  CHECK_THROWS_AS(expected_grassmann_dim(9, 2, 2, 2), std::invalid_argument);
}
