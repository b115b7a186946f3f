#pragma once

#include <cstdint>
#include <vector>

#include "sv/combinat.hpp"
#include "sv/config.hpp"

namespace sv {

// Arithmetic in F_p for a prime p with 10^6 <= p < 2^32. Products of two
// reduced elements fit in 64 bits; reduction uses a precomputed Barrett
// constant, so no division appears in inner loops.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t reduce(std::uint64_t v) const noexcept {
    // Barrett: q = floor(v * floor(2^64/p) / 2^64) satisfies v - q*p < 2p.
    const std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(v) * barrett_) >> 64);
    std::uint64_t r = v - q * p_;
    if (r >= p_) r -= p_;
    return r;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    if (s >= p_) s -= p_;
    return s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return reduce(a * b);  // a, b < p < 2^32
  }

  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;  // throws on a == 0

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint64_t p_;
  std::uint64_t barrett_;  // floor(2^64 / p)
};

// Dense row-major matrix over F_p. Entries always reduced.
class FpMatrix {
 public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint64_t& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::uint64_t* row_ptr(std::size_t r) { return entries_.data() + r * cols_; }
  const std::uint64_t* row_ptr(std::size_t r) const { return entries_.data() + r * cols_; }

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> entries_;
};

// Exact rank over F_p by row reduction with first-nonzero pivoting.
// Takes a copy; the argument is never modified.
i64 rank(FpMatrix m);

// A rank together with everything needed to reproduce it. `rank` is the max
// of the per-trial values: a rank at special points only ever undershoots
// the generic one, so the max over independent draws is a certified lower
// bound and, with overwhelming probability, the generic value.
struct RankResult {
  i64 rank = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<i64> per_trial_ranks;

  bool operator==(const RankResult&) const = default;
};

// SplitMix64. Small, fully specified, identical on every platform; the
// sequence is a pure function of the 64-bit seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Seed for an independent stream (one per trial, grid cell, suite case...).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Uniform draw from [0, p-1] by rejection; unbiased and deterministic
// given the generator state.
std::uint64_t random_field_element(SplitMix64& rng, const PrimeField& field);

}  // namespace sv
