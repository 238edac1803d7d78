#include <random>

#include "doctest.h"
#include "hanoi/numerics.hpp"
#include "hanoi/potential.hpp"
#include "oracles.hpp"

using hanoi::BigInt;
using hanoi::DiskSet;
using hanoi::LemmaCheck;

namespace {

// Supremum by brute force over a generous range of levels, no cutoff argument.
BigInt psi_brute(const DiskSet& e) {
  BigInt best = hanoi::psi_L(e, 0);
  for (std::uint64_t level = 1; level <= 64; ++level) {
    const BigInt v = hanoi::psi_L(e, level);
    if (v > best) best = v;
  }
  return best;
}

DiskSet random_set(std::mt19937_64& rng, std::uint64_t bound, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size(0, max_size);
  std::uniform_int_distribution<std::uint64_t> label(0, bound - 1);
  std::vector<std::uint64_t> v(size(rng));
  for (auto& x : v) x = label(rng);
  return DiskSet::from_unsorted(v);
}

}  // namespace

TEST_CASE("DiskSet keeps labels sorted and unique") {
  const DiskSet s{5, 1, 3, 1};
  CHECK(s.elements() == std::vector<std::uint64_t>{1, 3, 5});
  CHECK(s.max() == 5);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.without(3) == DiskSet{1, 5});
  CHECK(s.set_union(DiskSet{2, 3}) == DiskSet{1, 2, 3, 5});
  CHECK(s.count_at_least(3) == 2);
  CHECK(DiskSet::parse("4,0,2") == DiskSet{0, 2, 4});
  CHECK(DiskSet::parse("").empty());
  CHECK(DiskSet::range(3) == DiskSet{0, 1, 2});
  CHECK_THROWS_AS(DiskSet::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(DiskSet::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(DiskSet::from_sorted({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DiskSet{}.max(), std::logic_error);
}

TEST_CASE("nabla4 matches the general nabla") {
  for (std::uint64_t n = 0; n < 5000; ++n) REQUIRE(hanoi::nabla4(n) == hanoi::nabla(4, n));
  CHECK(hanoi::nabla4(UINT64_MAX) == hanoi::nabla(4, BigInt(UINT64_MAX)));
}

TEST_CASE("psi_L examples") {
  CHECK(hanoi::psi_L({}, 0) == 0);
  CHECK(hanoi::psi_L(DiskSet::range(4), 0) == 4);
  // (1 - 2) 2^2 - 1 + 2^0 + 2^1 + 2^1
  CHECK(hanoi::psi_L({0, 1, 2}, 2) == 0);
  CHECK(hanoi::psi_L({0, 1, 2}, 1) == 4);
  CHECK(hanoi::psi_L({}, 3) == -17);
}

TEST_CASE("psi examples") {
  CHECK(hanoi::psi({}) == 0);
  CHECK(hanoi::psi({0}) == 1);
  CHECK(hanoi::psi(DiskSet::range(4)) == 6);
  CHECK(hanoi::psi_argmax(DiskSet::range(4)) == 1);
}

TEST_CASE("psi agrees with a wide brute-force scan") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const DiskSet e = random_set(rng, 500, 60);
    REQUIRE(hanoi::psi(e) == psi_brute(e));
  }
  for (std::uint64_t n = 0; n <= 60; ++n) REQUIRE(hanoi::psi(DiskSet::range(n)) == psi_brute(DiskSet::range(n)));
}

TEST_CASE("psi_L strictly decreases past the scan cutoff") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const DiskSet e = random_set(rng, 500, 50);
    const std::uint64_t start = e.empty() ? 1 : std::max<std::uint64_t>(1, hanoi::nabla4(e.max()));
    for (std::uint64_t level = start; level < start + 8; ++level) {
      REQUIRE(hanoi::psi_L(e, level + 1) < hanoi::psi_L(e, level));
    }
  }
}

TEST_CASE("psi of an initial segment is half a midpoint transfer") {
  const auto phi = oracle::phi_table(4, 201);
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const std::uint64_t half = (phi[4][n + 1] - 1) / 2;
    REQUIRE((phi[4][n + 1] - 1) % 2 == 0);
    REQUIRE(hanoi::psi(DiskSet::range(n)) == half);
    std::uint64_t split = UINT64_MAX;
    for (std::uint64_t a = 1; a < n; ++a) split = std::min(split, phi[4][a] + phi[3][n - a]);
    REQUIRE(split == half);
  }
}

TEST_CASE("psi is monotone under inclusion") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const DiskSet e = random_set(rng, 300, 40);
    const DiskSet f = e.set_union(random_set(rng, 300, 20));
    REQUIRE(e.is_subset_of(f));
    REQUIRE(hanoi::psi(e) <= hanoi::psi(f));
  }
}

TEST_CASE("removal bound examples") {
  CHECK(hanoi::check_removal_bound(DiskSet::range(4), 2, 3) == LemmaCheck::kHolds);
  CHECK(hanoi::check_removal_bound({0}, 1, 0) == LemmaCheck::kHolds);
  CHECK(hanoi::check_removal_bound({0}, 0, 0) == LemmaCheck::kNotApplicable);
  CHECK_THROWS_AS(hanoi::check_removal_bound({0, 1}, 2, 5), std::invalid_argument);
}

TEST_CASE("removal bound holds on random applicable instances") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint64_t> s_dist(0, 20);
  int applicable = 0;
  while (applicable < 1000) {
    const DiskSet a_set = random_set(rng, 200, 30);
    if (a_set.empty()) continue;
    const std::uint64_t s = s_dist(rng);
    std::uniform_int_distribution<std::size_t> pick(0, a_set.size() - 1);
    const auto r = hanoi::check_removal_bound(a_set, s, a_set.elements()[pick(rng)]);
    if (r == LemmaCheck::kNotApplicable) continue;
    ++applicable;
    REQUIRE(r == LemmaCheck::kHolds);
  }
}

TEST_CASE("union bound examples") {
  CHECK(hanoi::check_union_bound({}, {}));
  CHECK(hanoi::psi(DiskSet::range(3)) == 4);
  CHECK(hanoi::check_union_bound(DiskSet::range(3), {}));
}

TEST_CASE("union bound holds on random pairs") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(hanoi::check_union_bound(random_set(rng, 200, 40), random_set(rng, 200, 40)));
  }
}
