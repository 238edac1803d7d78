#pragma once

// Lower and upper bounds on H(p, N) (optimal transfer) and Gamma(p, N)
// (shortest essential path), plus a dynamic program over the recursive
// inequality Gamma(p, N) >= 2 min(Gamma(p, N - l), Gamma(p - 1, l)).

#include <cstdint>
#include <optional>
#include <vector>

#include "hanoi/bigint.hpp"
#include "hanoi/dyadic.hpp"

namespace hanoi {

/// 2^{m-1} with m the largest integer such that C(m + p - 3, p - 2) < N.
DyadicRational chen_shen_bound(int p, std::uint64_t n);

/// (m + t) 2^{m - 2(p - 2)} from the decomposition of N - 1. Requires p >= 4.
DyadicRational main2_bound(int p, std::uint64_t n);

/// Gamma(3, N): N for N <= 1, else 1 + 2^{N-2}.
BigInt gamma3_formula(std::uint64_t n);

/// Gamma(4, N): N for N <= 2, else 3 + (Phi(4, N) - 5) / 4.
BigInt gamma4_formula(std::uint64_t n);

/// N for N <= p - 2, else p - 1 + (Phi(p, N) - (2(p - 2) + 1)) / 4. Proven for
/// p in {3, 4}, conjectural beyond.
BigInt gamma_conjecture(int p, std::uint64_t n);

/// p - 1 + (Phi(p, N) - (2(p - 2) + 1)) / 4 as an exact rational, for N >= p - 1.
DyadicRational gamma_upper_general(int p, std::uint64_t n);

/// LB(4, .) = Gamma(4, .) and, for q >= 5,
///   LB(q, N) = max(N, LB(q, N - 1), max_l 2 min(LB(q, N - l), LB(q - 1, l))).
/// Row index is q - 4; each row holds N = 0..max_disks.
std::vector<std::vector<BigInt>> dp_lower_bound_table(int p, std::uint64_t max_disks);

BigInt dp_lower_bound(int p, std::uint64_t n);

inline constexpr int kDpMaxPegs = 10;
inline constexpr std::uint64_t kDpMaxDisks = 10'000;

/// Everything known about (p, N) at once. Fields that need p >= 4 or
/// N >= p - 1 are empty outside their range.
struct BoundReport {
  int p = 3;
  std::uint64_t n = 0;
  std::optional<DyadicRational> chen_shen;  // N >= 1
  std::optional<DyadicRational> main2;      // p >= 4, N >= 1
  std::uint64_t trivial_n = 0;
  std::optional<BigInt> dp_lower;           // p >= 4
  /// Proven closed form for p <= 4; empty for p >= 5 ("conjectured").
  std::optional<BigInt> gamma_formula;
  BigInt gamma_conjecture = 0;
  BigInt phi_upper = 0;
  std::optional<DyadicRational> gamma_upper_general;  // N >= p - 1

  bool conjectured() const noexcept { return !gamma_formula.has_value(); }

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport bound_report(int p, std::uint64_t n);

}  // namespace hanoi
