#include "hanoi/state_space.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "hanoi/errors.hpp"
#include "hanoi/potential.hpp"

namespace hanoi {

namespace {

void check_shape(int pegs, int disks) {
  if (pegs < kMinPegs || pegs > kMaxPegs) {
    throw std::invalid_argument("peg count must be in [" + std::to_string(kMinPegs) + ", " +
                                std::to_string(kMaxPegs) + "], got " + std::to_string(pegs));
  }
  if (disks < 0 || disks > kMaxDisks) {
    throw std::invalid_argument("disk count must be in [0, " + std::to_string(kMaxDisks) +
                                "], got " + std::to_string(disks));
  }
}

class Bitmap {
 public:
  explicit Bitmap(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}

  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  /// Returns the previous value.
  bool test_and_set(std::uint64_t i) {
    std::uint64_t& w = words_[i >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    const bool was = (w & bit) != 0;
    w |= bit;
    return was;
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Rank arithmetic for H(p, N); neighbours are generated without building
/// Configuration objects.
class RankedSpace {
 public:
  RankedSpace(int pegs, int disks) : pegs_(pegs), disks_(disks) {
    std::uint64_t w = 1;
    for (int i = 0; i < disks; ++i) {
      weight_[static_cast<std::size_t>(i)] = w;
      w *= static_cast<std::uint64_t>(pegs);
    }
    size_ = w;
  }

  std::uint64_t size() const { return size_; }

  /// Calls f(neighbour_rank, moved_disk) for every legal move out of `rank`.
  template <typename F>
  void for_each_neighbor(std::uint64_t rank, F&& f) const {
    std::array<int, kMaxPegs> top{};
    top.fill(disks_);
    const std::uint64_t base = rank;
    std::uint64_t rest = rank;
    for (int d = 0; d < disks_; ++d) {
      const auto x = static_cast<std::size_t>(rest % static_cast<std::uint64_t>(pegs_));
      rest /= static_cast<std::uint64_t>(pegs_);
      if (top[x] == disks_) top[x] = d;
    }
    for (int x = 0; x < pegs_; ++x) {
      const int d = top[static_cast<std::size_t>(x)];
      if (d == disks_) continue;
      const std::uint64_t w = weight_[static_cast<std::size_t>(d)];
      const std::uint64_t without = base - static_cast<std::uint64_t>(x) * w;
      for (int y = 0; y < pegs_; ++y) {
        if (y == x || top[static_cast<std::size_t>(y)] < d) continue;
        f(without + static_cast<std::uint64_t>(y) * w, d);
      }
    }
  }

 private:
  int pegs_;
  int disks_;
  std::uint64_t size_ = 1;
  std::array<std::uint64_t, kMaxDisks> weight_{};
};

std::uint64_t checked_state_count(int pegs, int disks, std::uint64_t cap) {
  const auto n = state_count(pegs, disks);
  if (!n || *n > cap) {
    throw CapExceeded("H(" + std::to_string(pegs) + "," + std::to_string(disks) +
                      ") has more than " + std::to_string(cap) + " states");
  }
  return *n;
}

}  // namespace

Configuration::Configuration(int pegs, std::vector<std::uint8_t> peg_of)
    : pegs_(pegs), peg_of_(std::move(peg_of)) {
  check_shape(pegs_, static_cast<int>(peg_of_.size()));
  for (const auto x : peg_of_) {
    if (x >= pegs_) throw std::invalid_argument("peg label out of range");
  }
}

Configuration Configuration::all_on(int pegs, int disks, int peg) {
  check_shape(pegs, disks);
  if (peg < 0 || peg >= pegs) throw std::invalid_argument("peg label out of range");
  return Configuration(pegs, std::vector<std::uint8_t>(static_cast<std::size_t>(disks),
                                                       static_cast<std::uint8_t>(peg)));
}

Configuration Configuration::from_rank(int pegs, int disks, std::uint64_t rank) {
  check_shape(pegs, disks);
  std::vector<std::uint8_t> peg_of(static_cast<std::size_t>(disks));
  for (auto& x : peg_of) {
    x = static_cast<std::uint8_t>(rank % static_cast<std::uint64_t>(pegs));
    rank /= static_cast<std::uint64_t>(pegs);
  }
  if (rank != 0) throw std::invalid_argument("rank out of range");
  return Configuration(pegs, std::move(peg_of));
}

Configuration Configuration::parse(std::string_view text, int pegs) {
  std::vector<std::uint8_t> peg_of;
  std::size_t pos = 0;
  while (!text.empty() && pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    unsigned v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size() ||
        v >= static_cast<unsigned>(pegs)) {
      throw std::invalid_argument("configuration: bad peg '" + std::string(token) + "'");
    }
    peg_of.push_back(static_cast<std::uint8_t>(v));
    pos = comma + 1;
  }
  return Configuration(pegs, std::move(peg_of));
}

std::uint64_t Configuration::rank() const {
  if (!state_count(pegs_, disks())) throw std::overflow_error("configuration rank overflows");
  std::uint64_t r = 0;
  for (auto it = peg_of_.rbegin(); it != peg_of_.rend(); ++it) {
    r = r * static_cast<std::uint64_t>(pegs_) + *it;
  }
  return r;
}

std::optional<int> Configuration::top(int peg) const {
  for (std::size_t d = 0; d < peg_of_.size(); ++d) {
    if (peg_of_[d] == peg) return static_cast<int>(d);
  }
  return std::nullopt;
}

DiskSet Configuration::disks_on(int peg) const {
  std::vector<std::uint64_t> labels;
  for (std::size_t d = 0; d < peg_of_.size(); ++d) {
    if (peg_of_[d] == peg) labels.push_back(d);
  }
  return DiskSet::from_sorted(std::move(labels));
}

Configuration Configuration::restricted(int n) const {
  if (n < 0 || n > disks()) throw std::invalid_argument("restricted: bad disk count");
  return Configuration(pegs_, std::vector<std::uint8_t>(peg_of_.begin(), peg_of_.begin() + n));
}

std::string Configuration::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < peg_of_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(peg_of_[i]);
  }
  return out;
}

std::optional<std::uint64_t> state_count(int pegs, int disks) {
  std::uint64_t n = 1;
  for (int i = 0; i < disks; ++i) {
    if (n > UINT64_MAX / static_cast<std::uint64_t>(pegs)) return std::nullopt;
    n *= static_cast<std::uint64_t>(pegs);
  }
  return n;
}

std::vector<Move> legal_moves(const Configuration& c) {
  std::vector<std::pair<int, int>> tops;  // (disk, peg)
  for (int x = 0; x < c.pegs(); ++x) {
    if (const auto d = c.top(x)) tops.emplace_back(*d, x);
  }
  std::sort(tops.begin(), tops.end());
  std::vector<Move> out;
  for (const auto& [d, x] : tops) {
    for (int y = 0; y < c.pegs(); ++y) {
      if (y == x) continue;
      const auto other = c.top(y);
      if (!other || *other > d) out.push_back({d, x, y});
    }
  }
  return out;
}

Configuration apply_move(const Configuration& c, const Move& m) {
  if (m.disk < 0 || m.disk >= c.disks()) throw std::invalid_argument("move: disk out of range");
  if (m.from < 0 || m.from >= c.pegs() || m.to < 0 || m.to >= c.pegs()) {
    throw std::invalid_argument("move: peg out of range");
  }
  if (m.from == m.to) throw std::invalid_argument("move: source equals target");
  const std::string where = "disk " + std::to_string(m.disk) + " " + std::to_string(m.from) +
                            "->" + std::to_string(m.to);
  if (c.peg_of(m.disk) != m.from || c.top(m.from) != m.disk) {
    throw IllegalMove(IllegalMove::Rule::kTopmost, where + ": not the topmost disk of the source peg");
  }
  if (const auto dst = c.top(m.to); dst && *dst < m.disk) {
    throw IllegalMove(IllegalMove::Rule::kSize, where + ": target peg holds smaller disk " +
                                                    std::to_string(*dst));
  }
  Configuration next = c;
  next.peg_of_[static_cast<std::size_t>(m.disk)] = static_cast<std::uint8_t>(m.to);
  return next;
}

Configuration MovePath::replay() const {
  Configuration c = start;
  for (const auto& m : moves) c = apply_move(c, m);
  return c;
}

MovePath MovePath::reversed() const {
  MovePath r;
  r.start = replay();
  r.moves.reserve(moves.size());
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    r.moves.push_back({it->disk, it->to, it->from});
  }
  return r;
}

bool is_essential(const MovePath& path) {
  std::vector<bool> moved(static_cast<std::size_t>(path.start.disks()), false);
  for (const auto& m : path.moves) {
    if (m.disk >= 0 && m.disk < path.start.disks()) moved[static_cast<std::size_t>(m.disk)] = true;
  }
  return std::all_of(moved.begin(), moved.end(), [](bool b) { return b; });
}

std::uint64_t distance(const Configuration& u, const Configuration& v, const SearchLimits& limits) {
  if (u.pegs() != v.pegs() || u.disks() != v.disks()) {
    throw std::invalid_argument("distance: configurations differ in shape");
  }
  const std::uint64_t n = checked_state_count(u.pegs(), u.disks(), limits.max_states);
  if (u == v) return 0;
  const RankedSpace space(u.pegs(), u.disks());

  struct Side {
    Bitmap seen;
    std::vector<std::uint64_t> frontier;
    std::uint64_t depth = 0;
  };
  Side a{Bitmap(n), {u.rank()}, 0};
  Side b{Bitmap(n), {v.rank()}, 0};
  a.seen.test_and_set(u.rank());
  b.seen.test_and_set(v.rank());

  // The seen sets stay disjoint while d(u, v) > depth_a + depth_b, so the first
  // newly reached state already seen by the other side fixes the distance.
  while (!a.frontier.empty() && !b.frontier.empty()) {
    const bool grow_a = a.frontier.size() <= b.frontier.size();
    Side& self = grow_a ? a : b;
    const Side& other = grow_a ? b : a;
    std::vector<std::uint64_t> next;
    bool met = false;
    for (const std::uint64_t r : self.frontier) {
      space.for_each_neighbor(r, [&](std::uint64_t w, int) {
        if (other.seen.test(w)) met = true;
        if (!self.seen.test_and_set(w)) next.push_back(w);
      });
      if (met) return self.depth + 1 + other.depth;
    }
    self.frontier = std::move(next);
    ++self.depth;
  }
  throw std::logic_error("distance: Hanoi graph unexpectedly disconnected");
}

std::uint64_t exact_H(int pegs, int disks, const SearchLimits& limits) {
  return distance(Configuration::all_on(pegs, disks, 0),
                  Configuration::all_on(pegs, disks, pegs - 1), limits);
}

std::uint64_t exact_gamma(int pegs, int disks, const SearchLimits& limits) {
  check_shape(pegs, disks);
  if (disks == 0) return 0;
  const auto configs = state_count(pegs, disks);
  const std::uint64_t masks = std::uint64_t{1} << disks;
  if (!configs || *configs > limits.max_product_states / masks) {
    throw CapExceeded("essential-path search for p=" + std::to_string(pegs) + " N=" +
                      std::to_string(disks) + " exceeds " +
                      std::to_string(limits.max_product_states) + " product states");
  }
  const std::uint64_t full = masks - 1;
  const RankedSpace space(pegs, disks);
  Bitmap seen(*configs * masks);
  std::vector<std::uint64_t> frontier(*configs);
  for (std::uint64_t r = 0; r < *configs; ++r) {
    frontier[r] = r;
    seen.test_and_set(r);
  }
  // Multi-source BFS: every configuration starts at depth 0 with nothing moved.
  for (std::uint64_t depth = 0; !frontier.empty(); ++depth) {
    std::vector<std::uint64_t> next;
    bool done = false;
    for (const std::uint64_t state : frontier) {
      const std::uint64_t mask = state / *configs;
      space.for_each_neighbor(state % *configs, [&](std::uint64_t w, int d) {
        const std::uint64_t m = mask | (std::uint64_t{1} << d);
        if (m == full) done = true;
        const std::uint64_t s = m * *configs + w;
        if (!seen.test_and_set(s)) next.push_back(s);
      });
      if (done) return depth + 1;
    }
    frontier = std::move(next);
  }
  throw std::logic_error("exact_gamma: no essential path found");
}

bool check_bousch_inequality(const Configuration& u, const Configuration& v, int a,
                             const SearchLimits& limits) {
  if (u.pegs() != 4 || v.pegs() != 4) throw PreconditionError("Bousch inequality needs p = 4");
  if (u.disks() != v.disks()) throw PreconditionError("configurations differ in disk count");
  if (a < 0 || a >= 4) throw PreconditionError("peg a out of range");
  if (!v.peg_empty(a)) throw PreconditionError("peg a is occupied in v");
  bool other_empty = false;
  for (int b = 0; b < 4; ++b) other_empty = other_empty || (b != a && v.peg_empty(b));
  if (!other_empty) throw PreconditionError("no second empty peg in v");
  return BigInt(distance(u, v, limits)) >= psi(u.disks_on(a));
}

}  // namespace hanoi
