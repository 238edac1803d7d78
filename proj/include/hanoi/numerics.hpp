#pragma once

#include <cstdint>

#include "hanoi/bigint.hpp"

namespace hanoi {

/// C(n, k), zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Simplex count Delta_p(n) = C(n + p - 3, p - 2). Requires p >= 3.
BigInt delta(int p, std::uint64_t n);

/// Largest k >= 0 with Delta_p(k) <= n. Requires p >= 3.
std::uint64_t nabla(int p, const BigInt& n);

/// The unique writing N - 1 = Delta_p(m) + Delta_{p-1}(t) + r with t <= m and
/// 0 <= r < Delta_{p-2}(t + 1).
struct Decomposition {
  int p = 4;
  std::uint64_t n = 1;
  std::uint64_t m = 0;
  std::uint64_t t = 0;
  std::uint64_t r = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Greedy decomposition of N - 1 for p >= 4, N >= 1. Throws std::logic_error
/// if the result fails its own invariants.
Decomposition decompose(int p, std::uint64_t n);

/// True when d satisfies every Decomposition invariant.
bool is_valid(const Decomposition& d);

}  // namespace hanoi
