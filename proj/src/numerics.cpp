#include "hanoi/numerics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hanoi {

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("not an integer: '" + text + "'");
    v = v * 10 + (c - '0');
  }
  return negative ? BigInt(-v) : v;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  // r stays integral: after step i it equals C(n - k + i, i).
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

void require_pegs(int p, int min_p) {
  if (p < min_p) {
    throw std::invalid_argument("peg count must be >= " + std::to_string(min_p) + ", got " +
                                std::to_string(p));
  }
}

}  // namespace

BigInt delta(int p, std::uint64_t n) {
  require_pegs(p, 3);
  return binomial(n + static_cast<std::uint64_t>(p - 3), static_cast<std::uint64_t>(p - 2));
}

std::uint64_t nabla(int p, const BigInt& n) {
  require_pegs(p, 3);
  if (n < 0) throw std::invalid_argument("nabla: argument must be non-negative");
  // Delta_p is strictly increasing on k >= 0, so gallop then bisect.
  std::uint64_t lo = 0;  // Delta_p(lo) <= n always holds
  std::uint64_t hi = 1;
  while (delta(p, hi) <= n) {
    lo = hi;
    if (hi > (std::uint64_t{1} << 62)) throw std::overflow_error("nabla: argument out of range");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (delta(p, mid) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

bool is_valid(const Decomposition& d) {
  if (d.p < 4 || d.n < 1 || d.t > d.m) return false;
  // Delta_{p-2}(t + 1) = C(t + p - 4, p - 4), written out so p = 4 works.
  const auto q = static_cast<std::uint64_t>(d.p - 4);
  if (BigInt(d.r) >= binomial(d.t + q, q)) return false;
  return delta(d.p, d.m) + delta(d.p - 1, d.t) + d.r == BigInt(d.n - 1);
}

Decomposition decompose(int p, std::uint64_t n) {
  require_pegs(p, 4);
  if (n < 1) throw std::invalid_argument("decompose: disk count must be >= 1");
  Decomposition d;
  d.p = p;
  d.n = n;
  const BigInt total = n - 1;
  d.m = nabla(p, total);
  const BigInt rest = total - delta(p, d.m);
  d.t = nabla(p - 1, rest);
  d.r = static_cast<std::uint64_t>(rest - delta(p - 1, d.t));
  if (!is_valid(d)) {
    throw std::logic_error("decompose: invariant violated for p=" + std::to_string(p) +
                           " N=" + std::to_string(n));
  }
  return d;
}

}  // namespace hanoi
