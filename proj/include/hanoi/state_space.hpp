#pragma once

// Explicit Hanoi graphs and the brute-force search oracle.
//
// A configuration of N disks on p pegs is a function [N] -> [p]; the stacking
// order on each peg is forced by disk size (disk 0 is the smallest). States are
// ranked densely as sum_i peg_of[i] * p^i, and the essential-path search works
// on (configuration, moved-mask) pairs ranked as mask * p^N + configuration.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hanoi/disk_set.hpp"

namespace hanoi {

inline constexpr int kMinPegs = 3;
inline constexpr int kMaxPegs = 8;
inline constexpr int kMaxDisks = 30;

struct Move {
  int disk = 0;
  int from = 0;
  int to = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

class Configuration {
 public:
  Configuration() = default;
  /// Throws std::invalid_argument on out-of-range pegs or sizes.
  Configuration(int pegs, std::vector<std::uint8_t> peg_of);

  static Configuration all_on(int pegs, int disks, int peg);
  static Configuration from_rank(int pegs, int disks, std::uint64_t rank);
  /// "0,0,1,3": disk 0 first. Empty text is the configuration with no disks.
  static Configuration parse(std::string_view text, int pegs);

  int pegs() const noexcept { return pegs_; }
  int disks() const noexcept { return static_cast<int>(peg_of_.size()); }
  int peg_of(int disk) const { return peg_of_.at(static_cast<std::size_t>(disk)); }
  const std::vector<std::uint8_t>& assignment() const noexcept { return peg_of_; }

  std::uint64_t rank() const;
  /// Smallest disk on `peg`, if any.
  std::optional<int> top(int peg) const;
  bool peg_empty(int peg) const { return !top(peg).has_value(); }
  /// u^{-1}(peg).
  DiskSet disks_on(int peg) const;
  /// Keeps disks 0..n-1 only.
  Configuration restricted(int n) const;

  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  friend Configuration apply_move(const Configuration& c, const Move& m);

  int pegs_ = kMinPegs;
  std::vector<std::uint8_t> peg_of_;
};

/// p^N, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> state_count(int pegs, int disks);

/// All legal moves, ordered by moving disk, then by target peg.
std::vector<Move> legal_moves(const Configuration& c);

/// Throws IllegalMove naming the broken rule, std::invalid_argument on
/// malformed moves (out-of-range disk or peg, from == to).
Configuration apply_move(const Configuration& c, const Move& m);

/// A start configuration and a move sequence from it.
struct MovePath {
  Configuration start;
  std::vector<Move> moves;

  std::size_t length() const noexcept { return moves.size(); }
  /// Replays every move, throwing IllegalMove at the first bad one.
  Configuration replay() const;
  /// The same path walked backwards, starting from the replayed end.
  MovePath reversed() const;

  friend bool operator==(const MovePath&, const MovePath&) = default;
};

/// Every disk in [N] moves at least once.
bool is_essential(const MovePath& path);

struct SearchLimits {
  std::uint64_t max_states = std::uint64_t{1} << 26;          // plain Hanoi graph
  std::uint64_t max_product_states = std::uint64_t{1} << 28;  // configuration x moved-mask
};

/// Shortest-path length in the Hanoi graph (bidirectional BFS). Throws
/// CapExceeded when p^N exceeds limits.max_states.
std::uint64_t distance(const Configuration& u, const Configuration& v,
                       const SearchLimits& limits = {});

/// Minimum moves from all disks on peg 0 to all disks on peg p-1.
std::uint64_t exact_H(int pegs, int disks, const SearchLimits& limits = {});

/// Length of the shortest essential path over all start and end configurations.
std::uint64_t exact_gamma(int pegs, int disks, const SearchLimits& limits = {});

/// For p = 4: distance(u, v) >= Psi(u^{-1}(a)) whenever peg a and one other peg
/// are empty in v. Throws PreconditionError if the hypothesis fails.
bool check_bousch_inequality(const Configuration& u, const Configuration& v, int a,
                             const SearchLimits& limits = {});

}  // namespace hanoi
