#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "rank_oracle.hpp"
#include "sv/modlinalg.hpp"

using namespace sv;

namespace {

FpMatrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols,
                       SplitMix64& rng) {
  FpMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_field_element(rng, f);
  }
  return m;
}

FpMatrix transpose(const FpMatrix& m) {
  FpMatrix t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

}  // namespace

// Startup self-test: the product of random full-rank factors has the
// factor rank with overwhelming probability.
TEST_CASE("rank of a product of rank-r factors is r") {
  const PrimeField f;
  SplitMix64 rng(2024);
  for (int r = 1; r <= 5; ++r) {
    const std::size_t n = 12, m = 17;
    const FpMatrix a = random_matrix(f, n, static_cast<std::size_t>(r), rng);
    const FpMatrix b = random_matrix(f, static_cast<std::size_t>(r), m, rng);
    FpMatrix prod(f, n, m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t l = 0; l < static_cast<std::size_t>(r); ++l) {
          acc = f.add(acc, f.mul(a(i, l), b(l, j)));
        }
        prod(i, j) = acc;
      }
    }
    CHECK(rank(prod) == r);
  }
}

TEST_CASE("prime field construction") {
  CHECK(PrimeField().modulus() == 2147483647ULL);
  CHECK_THROWS_AS(PrimeField(2147483646ULL), std::invalid_argument);  // composite
  CHECK_THROWS_AS(PrimeField(101), std::invalid_argument);            // too small
  CHECK_THROWS_AS(PrimeField(4294967311ULL), std::invalid_argument);  // >= 2^32
  CHECK_NOTHROW(PrimeField(1000003));

  const PrimeField f(1000003);
  SplitMix64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t a = random_field_element(rng, f);
    if (a == 0) continue;
    CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("rank basics") {
  const PrimeField f;
  FpMatrix id(f, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
  CHECK(rank(id) == 3);

  CHECK(rank(FpMatrix(f, 4, 6)) == 0);

  FpMatrix ones(f, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) ones(i, j) = 1;
  }
  CHECK(rank(ones) == 1);
}

TEST_CASE("rank agrees with the exhaustive-minor oracle on small matrices") {
  const PrimeField f;
  SplitMix64 rng(314);
  for (int iter = 0; iter < 12; ++iter) {
    // mix full-rank and rank-deficient instances
    const std::size_t rows = 2 + rng.next() % 3;  // 2..4
    const std::size_t cols = 2 + rng.next() % 4;  // 2..5
    FpMatrix m = random_matrix(f, rows, cols, rng);
    if (iter % 2 == 0 && rows >= 2) {
      // make the last row a combination of the first two
      const std::uint64_t u = random_field_element(rng, f);
      const std::uint64_t v = random_field_element(rng, f);
      for (std::size_t c = 0; c < cols; ++c) {
        m(rows - 1, c) = f.add(f.mul(u, m(0, c)), f.mul(v, m(rows % 2, c)));
      }
    }
    CHECK(rank(m) == svtest::minor_rank(m));
  }
}

TEST_CASE("rank is invariant under transpose, row shuffles, and row scaling") {
  const PrimeField f;
  SplitMix64 rng(99);
  for (int iter = 0; iter < 5; ++iter) {
    FpMatrix m = random_matrix(f, 20, 30, rng);
    // plant some dependent rows so the rank is not trivially full
    for (std::size_t r = 15; r < 20; ++r) {
      const std::uint64_t u = random_field_element(rng, f);
      for (std::size_t c = 0; c < 30; ++c) m(r, c) = f.mul(u, m(r - 15, c));
    }
    const i64 base = rank(m);
    CHECK(base == rank(transpose(m)));

    std::vector<std::size_t> perm(20);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 19; i > 0; --i) std::swap(perm[i], perm[rng.next() % (i + 1)]);
    FpMatrix shuffled(f, 20, 30);
    for (std::size_t r = 0; r < 20; ++r) {
      std::uint64_t scale = 0;
      while (scale == 0) scale = random_field_element(rng, f);
      for (std::size_t c = 0; c < 30; ++c) shuffled(r, c) = f.mul(scale, m(perm[r], c));
    }
    CHECK(rank(shuffled) == base);
  }
}

TEST_CASE("random field elements are deterministic and uniform") {
  const PrimeField f;

  SplitMix64 a(42), b(42);
  for (int i = 0; i < 3; ++i) CHECK(random_field_element(a, f) == random_field_element(b, f));

  SplitMix64 c(42), d(43);
  bool differ = false;
  for (int i = 0; i < 10; ++i) {
    if (random_field_element(c, f) != random_field_element(d, f)) differ = true;
  }
  CHECK(differ);

  SplitMix64 e(20240809);
  long double sum = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const std::uint64_t v = random_field_element(e, f);
    CHECK(v < f.modulus());
    sum += static_cast<long double>(v);
  }
  const long double mean = sum / draws;
  const long double target = static_cast<long double>(f.modulus() - 1) / 2.0L;
  CHECK(std::abs(static_cast<double>(mean - target)) < 0.01 * static_cast<double>(target));
}

TEST_CASE("derived seeds give unrelated streams") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(7, 5) == derive_seed(7, 5));
}
