#include "hanoi/dyadic.hpp"

#include <boost/multiprecision/integer.hpp>

namespace hanoi {

DyadicRational::DyadicRational(BigInt mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto zeros = boost::multiprecision::lsb(boost::multiprecision::abs(mantissa_));
  mantissa_ >>= static_cast<unsigned>(zeros);
  exponent_ += static_cast<std::int64_t>(zeros);
}

BigInt DyadicRational::floor() const {
  if (exponent_ >= 0) return mantissa_ << static_cast<unsigned>(exponent_);
  // Arithmetic shift of a negative cpp_int rounds toward zero, so adjust.
  const auto shift = static_cast<unsigned>(-exponent_);
  if (mantissa_ >= 0) return mantissa_ >> shift;
  return -((-mantissa_ + (BigInt(1) << shift) - 1) >> shift);
}

BigInt DyadicRational::ceil() const {
  if (is_integer()) return floor();
  return floor() + 1;
}

std::string DyadicRational::to_string() const {
  if (exponent_ >= 0) return floor().str();
  return mantissa_.str() + "*2^" + std::to_string(exponent_);
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  const std::int64_t e = std::min(a.exponent_, b.exponent_);
  const BigInt lhs = a.mantissa_ << static_cast<unsigned>(a.exponent_ - e);
  const BigInt rhs = b.mantissa_ << static_cast<unsigned>(b.exponent_ - e);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace hanoi
