#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "hanoi/bigint.hpp"

namespace hanoi {

/// Exact value mantissa * 2^exponent, kept canonical (mantissa odd, or zero
/// with exponent 0).
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt mantissa, std::int64_t exponent = 0);  // NOLINT: implicit from integers

  const BigInt& mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }

  bool is_integer() const noexcept { return exponent_ >= 0 || mantissa_ == 0; }
  BigInt floor() const;
  BigInt ceil() const;

  /// "m*2^e", or the plain decimal when the value is an integer.
  std::string to_string() const;

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

 private:
  BigInt mantissa_ = 0;
  std::int64_t exponent_ = 0;
};

}  // namespace hanoi
