#pragma once

// Bousch's potential on finite disk sets:
//   Psi_L(E) = (1 - L) 2^L - 1 + sum_{n in E} 2^{min(nabla_4(n), L)}
//   Psi(E)   = sup_L Psi_L(E)
// together with the removal and union inequalities it satisfies.

#include <cstdint>

#include "hanoi/bigint.hpp"
#include "hanoi/disk_set.hpp"

namespace hanoi {

BigInt psi_L(const DiskSet& e, std::uint64_t level);

/// Exact supremum. Psi_L(E) strictly decreases once L >= nabla_4(max E), so
/// the scan stops at L = nabla_4(max E) + 1.
BigInt psi(const DiskSet& e);

/// The level attaining psi(e) (smallest one on ties).
std::uint64_t psi_argmax(const DiskSet& e);

enum class LemmaCheck { kHolds, kFails, kNotApplicable };

/// Psi(A) - Psi(A - {a}) <= 2^{s-1}, applicable when |A - [Delta_4(s)]| <= s.
/// Throws std::invalid_argument if a is not in A.
LemmaCheck check_removal_bound(const DiskSet& a_set, std::uint64_t s, std::uint64_t a);

/// 4 (Psi(A) + Psi(B)) >= Phi(4, |A u B| + 3) - 5.
bool check_union_bound(const DiskSet& a, const DiskSet& b);

/// nabla_4 on machine words: largest k with k(k+1)/2 <= n.
std::uint64_t nabla4(std::uint64_t n);

}  // namespace hanoi
