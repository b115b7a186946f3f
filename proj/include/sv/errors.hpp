#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sv {

// Base class for failures that map to distinct CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An instance would need more matrix columns (or tensor entries) than the
// configured cap allows.
class CapExceededError : public Error {
 public:
  CapExceededError(std::size_t required, std::size_t cap)
      : Error("instance needs " + std::to_string(required) +
              " columns, cap is " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

// The two rank routes returned different values on the same point set.
// Must never happen; reported loudly instead of being resolved silently.
class MethodDisagreementError : public Error {
 public:
  MethodDisagreementError(std::int64_t direct_rank, std::int64_t reduced_rank)
      : Error("rank disagreement: direct=" + std::to_string(direct_rank) +
              " reduced=" + std::to_string(reduced_rank)),
        direct_(direct_rank),
        reduced_(reduced_rank) {}

  std::int64_t direct_rank() const noexcept { return direct_; }
  std::int64_t reduced_rank() const noexcept { return reduced_; }

 private:
  std::int64_t direct_;
  std::int64_t reduced_;
};

}  // namespace sv
