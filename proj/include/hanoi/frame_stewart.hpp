#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <vector>

#include "hanoi/bigint.hpp"
#include "hanoi/state_space.hpp"

namespace hanoi {

/// Memo table for the Frame-Stewart recursion
///   Phi(p, N) = min_{1 <= l < N} 2 Phi(p, l) + Phi(p - 1, N - l),
///   Phi(3, N) = 2^N - 1, Phi(p, 1) = 1, Phi(p, 0) = 0.
/// Rows grow on demand; access is serialized so one table may be shared.
class FrameStewartTable {
 public:
  BigInt phi(int p, std::uint64_t n);
  /// Smallest l in [1, N-1] minimizing 2 Phi(p, l) + Phi(p - 1, N - l).
  std::uint64_t best_split(int p, std::uint64_t n);

 private:
  void extend(int p, std::uint64_t n);

  std::mutex mutex_;
  // rows_[p - 3][n] = Phi(p, n); splits_ mirrors it for p >= 4.
  std::vector<std::vector<BigInt>> rows_;
  std::vector<std::vector<std::uint64_t>> splits_;
};

/// Phi by direct evaluation of the recursion (fresh memo per call).
BigInt phi_recursive(int p, std::uint64_t n);

/// Phi as sum_{n < N} 2^{nabla_p(n)}, grouped into runs of equal nabla.
BigInt phi_spectrum(int p, std::uint64_t n);

/// Phi(4, N) = 1 + (m + t) 2^m where N - 1 = Delta_4(m) + t, 0 <= t <= m.
BigInt phi4_closed(std::uint64_t n);

std::uint64_t best_split(int p, std::uint64_t n);

/// Frame-Stewart transfer of disks 0..N-1 from src to dst using only `pegs`.
/// Larger disks may sit anywhere; they never block. The start configuration
/// has one slot per peg label up to max(pegs).
MovePath frame_stewart_path(int disks, std::span<const int> pegs, int src, int dst);

/// Same transfer for the disk labels [first, first + count), appended to out.
/// Uses `table` for the splits.
void append_frame_stewart_moves(FrameStewartTable& table, int first, int count,
                                std::span<const int> pegs, int src, int dst,
                                std::vector<Move>& out);

}  // namespace hanoi
