#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sv {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1
inline constexpr std::size_t kDefaultSizeCap = 200000;         // max matrix columns

// Which route builds the conditions matrix: the multigraded one, the
// single-projective-space one, or both with an agreement check.
enum class Method { direct, reduced, both };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::direct:
      return "direct";
    case Method::reduced:
      return "reduced";
    case Method::both:
      return "both";
  }
  return "both";
}

inline Method method_from_name(const std::string& name) {
  if (name == "direct") return Method::direct;
  if (name == "reduced") return Method::reduced;
  if (name == "both") return Method::both;
  throw std::invalid_argument("unknown method: " + name);
}

// Knobs shared by every randomized computation. `seed` drives all point
// sampling; derived streams keep trials and grid cells independent.
struct RunConfig {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  int trials = 2;
  Method method = Method::both;
  std::size_t size_cap = kDefaultSizeCap;
};

}  // namespace sv
