#include "hanoi/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hanoi/bounds.hpp"
#include "hanoi/frame_stewart.hpp"

namespace hanoi {

namespace {

constexpr std::array<int, 3> kLowPegs{0, 1, 2};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("construction invariant failed: " + what);
}

/// Smallest a in [0, total] minimizing cost(a).
template <typename Cost>
std::uint64_t argmin_split(std::uint64_t total, Cost&& cost) {
  std::uint64_t best_a = 0;
  BigInt best = cost(0);
  for (std::uint64_t a = 1; a <= total; ++a) {
    BigInt v = cost(a);
    if (v < best) {
      best = std::move(v);
      best_a = a;
    }
  }
  return best_a;
}

/// Moves taking a midpoint arrangement of disks 0..a-1 over pegs {0, 1} back
/// onto peg 3, plus that arrangement itself.
struct Gather {
  std::vector<std::uint8_t> arrangement;
  std::vector<Move> moves;
};

Gather gather_onto_peg3(int a) {
  if (a == 0) return {};
  const MovePath forward = midpoint_path(a, 3, {0, 1}, 2);
  const MovePath back = forward.reversed();
  return {back.start.assignment(), back.moves};
}

}  // namespace

MovePath midpoint_path(int disks, int src, std::array<int, 2> targets, int spare) {
  if (disks < 1) throw std::invalid_argument("midpoint_path: need N >= 1");
  std::array<int, 4> pegs{src, targets[0], targets[1], spare};
  std::array<int, 4> sorted = pegs;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{0, 1, 2, 3}) {
    throw std::invalid_argument("midpoint_path: src, targets and spare must be the four pegs 0..3");
  }
  FrameStewartTable table;
  const auto n = static_cast<std::uint64_t>(disks);
  const std::uint64_t a = argmin_split(n - 1, [&](std::uint64_t k) {
    return table.phi(4, k) + table.phi(3, n - k);
  });
  MovePath path;
  path.start = Configuration::all_on(4, disks, src);
  const std::array<int, 3> bottom_pegs{src, spare, targets[1]};
  append_frame_stewart_moves(table, 0, static_cast<int>(a), pegs, src, targets[0], path.moves);
  append_frame_stewart_moves(table, static_cast<int>(a), disks - static_cast<int>(a), bottom_pegs,
                             src, targets[1], path.moves);
  require(BigInt(path.length()) == (table.phi(4, n + 1) - 1) / 2, "midpoint length");
  return path;
}

TightPair two1_tight_pair(int disks) {
  if (disks < 2) throw std::invalid_argument("two1_tight_pair: need N >= 2");
  FrameStewartTable table;
  const auto n = static_cast<std::uint64_t>(disks);
  TightPair out;
  out.a = argmin_split(n - 1, [&](std::uint64_t a) {
    return table.phi(4, a + 1) + table.phi(3, n - a);
  });
  out.b = n - out.a;
  const int a = static_cast<int>(out.a);
  const int b = static_cast<int>(out.b);

  Gather small = gather_onto_peg3(a);
  std::vector<std::uint8_t> start(static_cast<std::size_t>(disks), 0);
  std::copy(small.arrangement.begin(), small.arrangement.end(), start.begin());
  start[static_cast<std::size_t>(disks - 1)] = 1;

  out.path.start = Configuration(4, std::move(start));
  out.path.moves = std::move(small.moves);
  out.path.moves.push_back({disks - 1, 1, 2});
  append_frame_stewart_moves(table, disks - b, b - 1, kLowPegs, 0, 2, out.path.moves);
  out.u = out.path.start;
  out.v = out.path.replay();

  require(BigInt(out.path.length()) == 1 + (table.phi(4, n + 2) - 5) / 4, "tight pair length");
  require(out.u.peg_empty(2) && out.u.peg_empty(3), "u leaves pegs 2 and 3 empty");
  require(out.v.peg_empty(0) && out.v.peg_empty(1), "v leaves pegs 0 and 1 empty");
  return out;
}

MovePath main1_essential_path(int disks) {
  if (disks < 3) throw std::invalid_argument("main1_essential_path: need N >= 3");
  FrameStewartTable table;
  const auto n = static_cast<std::uint64_t>(disks);
  const std::uint64_t split = argmin_split(n - 3, [&](std::uint64_t a) {
    return table.phi(4, a + 1) + table.phi(3, n - 3 - a + 1);
  });
  const int a = static_cast<int>(split);
  const int b = disks - 3 - a;

  Gather small = gather_onto_peg3(a);
  std::vector<std::uint8_t> start(static_cast<std::size_t>(disks), 0);
  std::copy(small.arrangement.begin(), small.arrangement.end(), start.begin());
  start[static_cast<std::size_t>(disks - 1)] = 2;
  start[static_cast<std::size_t>(disks - 2)] = 1;

  MovePath path;
  path.start = Configuration(4, std::move(start));
  path.moves.push_back({disks - 1, 2, 3});
  path.moves.insert(path.moves.end(), small.moves.begin(), small.moves.end());
  path.moves.push_back({disks - 2, 1, 2});
  append_frame_stewart_moves(table, a, b, kLowPegs, 0, 2, path.moves);
  path.moves.push_back({disks - 3, 0, 1});

  path.replay();
  require(is_essential(path), "main1 path is essential");
  require(BigInt(path.length()) == gamma4_formula(n), "main1 length");
  return path;
}

}  // namespace hanoi
