#include "sv/modlinalg.hpp"

#include <stdexcept>
#include <string>

namespace sv {

namespace {

bool is_prime_u32(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 32)) {
    throw std::invalid_argument("modulus must fit in 32 bits");
  }
  if (p < 1000000) {
    throw std::invalid_argument("modulus must be >= 10^6 (small primes make spurious rank drops too likely)");
  }
  if (!is_prime_u32(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
  barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1;
  std::uint64_t b = reduce(base);
  while (exp > 0) {
    if (exp & 1) result = mul(result, b);
    b = mul(b, b);
    exp >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  a = reduce(a);
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  return pow(a, p_ - 2);
}

i64 rank(FpMatrix m) {
  const PrimeField& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // first row at or below r with a nonzero entry in column c
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(piv, j));
    }
    const std::uint64_t pivinv = f.inv(m(r, c));
    const std::uint64_t* src = m.row_ptr(r);
    for (std::size_t rr = r + 1; rr < rows; ++rr) {
      std::uint64_t* dst = m.row_ptr(rr);
      if (dst[c] == 0) continue;
      const std::uint64_t factor = f.mul(dst[c], pivinv);
      for (std::size_t j = c; j < cols; ++j) {
        dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
      }
    }
    ++r;
  }
  return static_cast<i64>(r);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // SplitMix64 finalizer applied twice; streams for distinct indices are
  // unrelated for all practical purposes.
  auto mix = [](std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  };
  return mix(mix(seed) ^ (index + 0x9E3779B97F4A7C15ULL));
}

std::uint64_t random_field_element(SplitMix64& rng, const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;  // p * floor(2^64 / p)
  std::uint64_t v = rng.next();
  while (v >= limit) v = rng.next();
  return v % p;
}

}  // namespace sv
