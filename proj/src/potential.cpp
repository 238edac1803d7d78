#include "hanoi/potential.hpp"

#include <stdexcept>
#include <vector>

#include "hanoi/frame_stewart.hpp"
#include "hanoi/numerics.hpp"

namespace hanoi {

std::uint64_t nabla4(std::uint64_t n) {
  std::uint64_t lo = 0;
  std::uint64_t hi = std::uint64_t{1} << 33;  // hi(hi+1)/2 > 2^64 > n
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    const unsigned __int128 tri = static_cast<unsigned __int128>(mid) * (mid + 1) / 2;
    if (tri <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

namespace {

BigInt psi_level(const std::vector<std::uint64_t>& levels, std::uint64_t level) {
  BigInt v = (BigInt(1) - BigInt(level)) * pow2(level) - 1;
  for (const auto k : levels) v += pow2(k < level ? k : level);
  return v;
}

std::vector<std::uint64_t> levels_of(const DiskSet& e) {
  std::vector<std::uint64_t> levels;
  levels.reserve(e.size());
  for (const auto n : e.elements()) levels.push_back(nabla4(n));
  return levels;
}

std::pair<std::uint64_t, BigInt> psi_scan(const DiskSet& e) {
  const auto levels = levels_of(e);
  const std::uint64_t last = e.empty() ? 1 : nabla4(e.max()) + 1;
  std::uint64_t best_level = 0;
  BigInt best = psi_level(levels, 0);
  for (std::uint64_t level = 1; level <= last; ++level) {
    BigInt v = psi_level(levels, level);
    if (v > best) {
      best = std::move(v);
      best_level = level;
    }
  }
  return {best_level, best};
}

}  // namespace

BigInt psi_L(const DiskSet& e, std::uint64_t level) { return psi_level(levels_of(e), level); }

BigInt psi(const DiskSet& e) { return psi_scan(e).second; }

std::uint64_t psi_argmax(const DiskSet& e) { return psi_scan(e).first; }

LemmaCheck check_removal_bound(const DiskSet& a_set, std::uint64_t s, std::uint64_t a) {
  if (!a_set.contains(a)) throw std::invalid_argument("removal bound: a is not an element of A");
  const BigInt cut = delta(4, s);
  std::size_t outside = 0;
  for (const auto x : a_set.elements()) outside += BigInt(x) >= cut ? 1 : 0;
  if (outside > s) return LemmaCheck::kNotApplicable;
  // Doubled to keep 2^{s-1} integral at s = 0.
  const BigInt twice_gap = 2 * (psi(a_set) - psi(a_set.without(a)));
  return twice_gap <= pow2(s) ? LemmaCheck::kHolds : LemmaCheck::kFails;
}

bool check_union_bound(const DiskSet& a, const DiskSet& b) {
  const std::uint64_t n = a.set_union(b).size();
  const BigInt rhs = phi_spectrum(4, n + 3) - 5;
  if (rhs % 4 != 0) {
    // Compare as rationals when 4 does not divide the right side.
    return 4 * (psi(a) + psi(b)) >= rhs;
  }
  return psi(a) + psi(b) >= rhs / 4;
}

}  // namespace hanoi
