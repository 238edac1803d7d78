#include <sstream>

#include "doctest.h"

#include "hanoi/constructions.hpp"
#include "hanoi/errors.hpp"
#include "hanoi/serialization.hpp"

using hanoi::BigInt;
using hanoi::DyadicRational;

TEST_CASE("dyadic json round-trip and ceiling field") {
  const DyadicRational half(1, -1);
  const auto j = hanoi::to_json(half);
  CHECK(j["mantissa"] == "1");
  CHECK(j["exponent"] == -1);
  CHECK(j["ceil"] == "1");
  CHECK(hanoi::dyadic_from_json(j) == half);
  for (int e = -5; e <= 5; ++e) {
    for (int m = -9; m <= 9; ++m) {
      const DyadicRational d(m, e);
      CHECK(hanoi::dyadic_from_json(hanoi::to_json(d)) == d);
    }
  }
}

TEST_CASE("decomposition json round-trip") {
  for (int p = 4; p <= 8; ++p) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      const auto d = hanoi::decompose(p, n);
      CHECK(hanoi::decomposition_from_json(hanoi::to_json(d)) == d);
    }
  }
  const auto j = hanoi::to_json(hanoi::decompose(5, 17));
  CHECK(j["m"] == 3);
  CHECK(j["t"] == 3);
  CHECK(j["r"] == 0);
}

TEST_CASE("decomposition json rejects inconsistent fields") {
  auto j = hanoi::to_json(hanoi::decompose(5, 17));
  j["r"] = 1;
  CHECK_THROWS(hanoi::decomposition_from_json(j));
}

TEST_CASE("bound report json round-trip") {
  for (int p = 3; p <= 7; ++p) {
    for (std::uint64_t n = 0; n <= 40; ++n) {
      const auto r = hanoi::bound_report(p, n);
      CHECK(hanoi::bound_report_from_json(hanoi::to_json(r)) == r);
    }
  }
  const auto r = hanoi::bound_report(5, 121);
  CHECK(hanoi::bound_report_from_json(hanoi::to_json(r)) == r);
}

TEST_CASE("bound report json marks conjectured gamma") {
  const auto j = hanoi::to_json(hanoi::bound_report(5, 4));
  CHECK(j["gamma_formula"] == "conjectured");
  const auto k = hanoi::to_json(hanoi::bound_report(4, 7));
  CHECK(k["gamma_formula"] == "8");
  CHECK(hanoi::to_json(hanoi::bound_report(4, 0))["chen_shen"].is_null());
}

TEST_CASE("move path json round-trip") {
  for (int n = 3; n <= 10; ++n) {
    const auto path = hanoi::main1_essential_path(n);
    const auto j = hanoi::to_json(path);
    CHECK(j["essential"] == true);
    CHECK(j["length"] == path.length());
    const auto back = hanoi::move_path_from_json(j);
    CHECK(back.start == path.start);
    CHECK(back.moves == path.moves);
  }
  const auto pair = hanoi::two1_tight_pair(4);
  const auto back = hanoi::move_path_from_json(hanoi::to_json(pair.path));
  CHECK(back.moves == pair.path.moves);
}

TEST_CASE("move path json rejects illegal moves") {
  auto j = hanoi::to_json(hanoi::main1_essential_path(4));
  j["moves"][0] = nlohmann::json::array({0, 2, 1});
  CHECK_THROWS(hanoi::move_path_from_json(j));
}

TEST_CASE("text move format") {
  const auto path = hanoi::main1_essential_path(7);
  const std::string text = hanoi::moves_to_text(path.moves);
  CHECK(std::count(text.begin(), text.end(), '\n') == 8);
  std::istringstream in(text);
  CHECK(hanoi::moves_from_text(in) == path.moves);

  std::istringstream bad("0 1\n");
  CHECK_THROWS(hanoi::moves_from_text(bad));
  std::istringstream junk("a b c\n");
  CHECK_THROWS(hanoi::moves_from_text(junk));
  std::istringstream blank("\n0 0 1\n\n");
  CHECK(hanoi::moves_from_text(blank).size() == 1);
}
