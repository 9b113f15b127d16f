#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace holoperiod {

/// The leading coefficient P0(n) shares a factor with the modulus, so the
/// recurrence cannot be stepped mod m past index n.
class NonInvertibleLeading : public std::runtime_error {
 public:
  NonInvertibleLeading(std::uint64_t index, std::uint64_t gcd_value,
                       std::uint64_t modulus)
      : std::runtime_error("leading coefficient not invertible at n = " +
                           std::to_string(index) + ": gcd(P0(n), " +
                           std::to_string(modulus) + ") = " +
                           std::to_string(gcd_value)),
        index_(index),
        gcd_(gcd_value),
        modulus_(modulus) {}

  std::uint64_t index() const noexcept { return index_; }
  std::uint64_t gcd_value() const noexcept { return gcd_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

 private:
  std::uint64_t index_;
  std::uint64_t gcd_;
  std::uint64_t modulus_;
};

/// A configured step/memory cap was hit before the computation finished.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input falls in a parameter regime the theory deliberately does not cover
/// (e.g. p = 2 with an even linear family coefficient).
class UnsupportedCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact integer result does not fit the supported word width.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree by theorem disagreed; indicates a bug, not bad
/// input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace holoperiod
