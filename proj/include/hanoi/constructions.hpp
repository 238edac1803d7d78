#pragma once

// Explicit 4-peg configurations and move sequences that attain the exact
// values: midpoint transfers, the tight pair for two-empty-peg endpoints, and
// an essential path of length Gamma(4, N).

#include <array>
#include <cstdint>

#include "hanoi/state_space.hpp"

namespace hanoi {

/// From all N disks on `src`, move the top a disks to targets[0] with all four
/// pegs, then the bottom b = N - a disks to targets[1] over {src, spare,
/// targets[1]}. The split (b >= 1, smallest a on ties) minimizes
/// Phi(4, a) + Phi(3, b), giving length (Phi(4, N + 1) - 1) / 2.
MovePath midpoint_path(int disks, int src, std::array<int, 2> targets, int spare);

struct TightPair {
  Configuration u;  // pegs 2 and 3 empty
  Configuration v;  // pegs 0 and 1 empty
  MovePath path;    // u -> v, length 1 + (Phi(4, N + 2) - 5) / 4
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

TightPair two1_tight_pair(int disks);

/// Essential path of length 3 + (Phi(4, N) - 5) / 4 for N >= 3.
MovePath main1_essential_path(int disks);

}  // namespace hanoi
