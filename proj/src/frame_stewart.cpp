#include "hanoi/frame_stewart.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "hanoi/numerics.hpp"
#include "hanoi/potential.hpp"

namespace hanoi {

namespace {

void require_pegs(int p, int min_p) {
  if (p < min_p) {
    throw std::invalid_argument("peg count must be >= " + std::to_string(min_p) + ", got " +
                                std::to_string(p));
  }
}

}  // namespace

void FrameStewartTable::extend(int p, std::uint64_t n) {
  const auto rows_needed = static_cast<std::size_t>(p - 2);
  if (rows_.size() < rows_needed) {
    rows_.resize(rows_needed);
    splits_.resize(rows_needed);
  }
  for (int q = 3; q <= p; ++q) {
    auto& row = rows_[static_cast<std::size_t>(q - 3)];
    auto& split = splits_[static_cast<std::size_t>(q - 3)];
    while (row.size() <= n) {
      const std::uint64_t k = row.size();
      if (q == 3) {
        row.push_back(pow2(k) - 1);
        split.push_back(k >= 2 ? k - 1 : 0);
        continue;
      }
      if (k <= 1) {
        row.push_back(k);
        split.push_back(0);
        continue;
      }
      const auto& below = rows_[static_cast<std::size_t>(q - 4)];
      std::uint64_t best_l = 1;
      BigInt best = 2 * row[1] + below[k - 1];
      for (std::uint64_t l = 2; l < k; ++l) {
        BigInt v = 2 * row[l] + below[k - l];
        if (v < best) {
          best = std::move(v);
          best_l = l;
        }
      }
      row.push_back(std::move(best));
      split.push_back(best_l);
    }
  }
}

BigInt FrameStewartTable::phi(int p, std::uint64_t n) {
  require_pegs(p, 3);
  std::lock_guard lock(mutex_);
  extend(p, n);
  return rows_[static_cast<std::size_t>(p - 3)][n];
}

std::uint64_t FrameStewartTable::best_split(int p, std::uint64_t n) {
  require_pegs(p, 4);
  if (n < 2) throw std::invalid_argument("best_split: need at least 2 disks");
  std::lock_guard lock(mutex_);
  extend(p, n);
  return splits_[static_cast<std::size_t>(p - 3)][n];
}

BigInt phi_recursive(int p, std::uint64_t n) {
  FrameStewartTable table;
  return table.phi(p, n);
}

std::uint64_t best_split(int p, std::uint64_t n) {
  FrameStewartTable table;
  return table.best_split(p, n);
}

BigInt phi_spectrum(int p, std::uint64_t n) {
  require_pegs(p, 3);
  BigInt sum = 0;
  const BigInt end = n;
  // Every m with nabla_p(m) = k lies in [Delta_p(k), Delta_p(k + 1)).
  BigInt lo = 0;
  for (std::uint64_t k = 0; lo < end; ++k) {
    BigInt hi = delta(p, k + 1);
    if (hi > end) hi = end;
    sum += (hi - lo) << static_cast<unsigned>(k);
    lo = std::move(hi);
  }
  return sum;
}

BigInt phi4_closed(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("phi4_closed: need N >= 1");
  const std::uint64_t m = nabla4(n - 1);
  const std::uint64_t t = n - 1 - m * (m + 1) / 2;
  return 1 + BigInt(m + t) * pow2(m);
}

void append_frame_stewart_moves(FrameStewartTable& table, int first, int count,
                                std::span<const int> pegs, int src, int dst,
                                std::vector<Move>& out) {
  if (count <= 0) return;
  if (count == 1) {
    out.push_back({first, src, dst});
    return;
  }
  int spare = -1;
  for (const int x : pegs) {
    if (x != src && x != dst) {
      spare = x;
      break;
    }
  }
  if (pegs.size() == 3) {
    append_frame_stewart_moves(table, first, count - 1, pegs, src, spare, out);
    out.push_back({first + count - 1, src, dst});
    append_frame_stewart_moves(table, first, count - 1, pegs, spare, dst, out);
    return;
  }
  const auto top = static_cast<int>(
      table.best_split(static_cast<int>(pegs.size()), static_cast<std::uint64_t>(count)));
  std::vector<int> rest;
  std::copy_if(pegs.begin(), pegs.end(), std::back_inserter(rest),
               [spare](int x) { return x != spare; });
  append_frame_stewart_moves(table, first, top, pegs, src, spare, out);
  append_frame_stewart_moves(table, first + top, count - top, rest, src, dst, out);
  append_frame_stewart_moves(table, first, top, pegs, spare, dst, out);
}

MovePath frame_stewart_path(int disks, std::span<const int> pegs, int src, int dst) {
  if (pegs.size() < 3) throw std::invalid_argument("frame_stewart_path: need at least 3 pegs");
  if (src == dst) throw std::invalid_argument("frame_stewart_path: source equals target");
  std::vector<int> sorted(pegs.begin(), pegs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("frame_stewart_path: peg labels must be distinct");
  }
  if (sorted.front() < 0) throw std::invalid_argument("frame_stewart_path: negative peg label");
  if (!std::binary_search(sorted.begin(), sorted.end(), src) ||
      !std::binary_search(sorted.begin(), sorted.end(), dst)) {
    throw std::invalid_argument("frame_stewart_path: src and dst must be among the pegs");
  }
  const int peg_count = std::max(kMinPegs, sorted.back() + 1);
  MovePath path;
  path.start = Configuration::all_on(peg_count, disks, src);
  FrameStewartTable table;
  append_frame_stewart_moves(table, 0, disks, pegs, src, dst, path.moves);
  return path;
}

}  // namespace hanoi
