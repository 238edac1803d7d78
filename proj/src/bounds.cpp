#include "hanoi/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hanoi/frame_stewart.hpp"
#include "hanoi/numerics.hpp"

namespace hanoi {

namespace {

void require_pegs(int p, int min_p) {
  if (p < min_p) {
    throw std::invalid_argument("peg count must be >= " + std::to_string(min_p) + ", got " +
                                std::to_string(p));
  }
}

BigInt exact_quarter(const BigInt& v, const char* what) {
  if (v % 4 != 0) throw std::logic_error(std::string(what) + ": 4 does not divide " + v.str());
  return v / 4;
}

}  // namespace

DyadicRational chen_shen_bound(int p, std::uint64_t n) {
  require_pegs(p, 3);
  if (n < 1) throw std::invalid_argument("chen_shen_bound: need N >= 1");
  // Delta_p(m) < N  <=>  Delta_p(m) <= N - 1.
  const std::uint64_t m = nabla(p, BigInt(n - 1));
  return DyadicRational(1, static_cast<std::int64_t>(m) - 1);
}

DyadicRational main2_bound(int p, std::uint64_t n) {
  const Decomposition d = decompose(p, n);
  return DyadicRational(BigInt(d.m + d.t),
                        static_cast<std::int64_t>(d.m) - 2 * static_cast<std::int64_t>(p - 2));
}

BigInt gamma3_formula(std::uint64_t n) {
  if (n <= 1) return n;
  return 1 + pow2(n - 2);
}

BigInt gamma4_formula(std::uint64_t n) {
  if (n <= 2) return n;
  return 3 + exact_quarter(phi_spectrum(4, n) - 5, "gamma4_formula");
}

BigInt gamma_conjecture(int p, std::uint64_t n) {
  require_pegs(p, 3);
  if (n <= static_cast<std::uint64_t>(p - 2)) return n;
  return p - 1 + exact_quarter(phi_spectrum(p, n) - (2 * (p - 2) + 1), "gamma_conjecture");
}

DyadicRational gamma_upper_general(int p, std::uint64_t n) {
  require_pegs(p, 3);
  if (n < static_cast<std::uint64_t>(p - 1)) {
    throw std::invalid_argument("gamma_upper_general: need N >= p - 1");
  }
  const BigInt numerator = 4 * (p - 1) + phi_spectrum(p, n) - (2 * (p - 2) + 1);
  return DyadicRational(numerator, -2);
}

std::vector<std::vector<BigInt>> dp_lower_bound_table(int p, std::uint64_t max_disks) {
  require_pegs(p, 4);
  if (p > kDpMaxPegs || max_disks > kDpMaxDisks) {
    throw std::invalid_argument("dp_lower_bound: outside p <= 10, N <= 10000");
  }
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(static_cast<std::size_t>(p - 3));
  auto& base = rows.emplace_back(max_disks + 1);
  for (std::uint64_t n = 0; n <= max_disks; ++n) base[n] = gamma4_formula(n);

  for (int q = 5; q <= p; ++q) {
    const auto& below = rows.back();
    std::vector<BigInt> row(max_disks + 1);
    for (std::uint64_t n = 1; n <= max_disks; ++n) {
      // Every disk moves at least once; deleting the largest disk keeps a
      // path essential.
      BigInt best = std::max(BigInt(n), row[n - 1]);
      for (std::uint64_t l = 1; l < n; ++l) {
        const BigInt& a = row[n - l];
        const BigInt& b = below[l];
        BigInt v = 2 * (a < b ? a : b);
        if (v > best) best = std::move(v);
      }
      row[n] = std::move(best);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

BigInt dp_lower_bound(int p, std::uint64_t n) { return dp_lower_bound_table(p, n).back()[n]; }

BoundReport bound_report(int p, std::uint64_t n) {
  require_pegs(p, 3);
  BoundReport r;
  r.p = p;
  r.n = n;
  r.trivial_n = n;
  if (n >= 1) r.chen_shen = chen_shen_bound(p, n);
  if (p >= 4 && n >= 1) r.main2 = main2_bound(p, n);
  if (p >= 4 && p <= kDpMaxPegs && n <= kDpMaxDisks) r.dp_lower = dp_lower_bound(p, n);
  if (p == 3) r.gamma_formula = gamma3_formula(n);
  if (p == 4) r.gamma_formula = gamma4_formula(n);
  r.gamma_conjecture = gamma_conjecture(p, n);
  r.phi_upper = phi_spectrum(p, n);
  if (n >= static_cast<std::uint64_t>(p - 1)) r.gamma_upper_general = gamma_upper_general(p, n);
  return r;
}

}  // namespace hanoi
