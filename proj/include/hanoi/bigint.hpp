#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hanoi {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(std::uint64_t e) {
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal string; throws std::invalid_argument.
BigInt parse_bigint(const std::string& text);

}  // namespace hanoi
