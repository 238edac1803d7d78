#pragma once

// JSON and text formats for the CLI and the result cache.
//
//   DyadicRational  {"mantissa": "3", "exponent": -2, "ceil": "1"}
//   Decomposition   {"p": 5, "N": 17, "m": 3, "t": 3, "r": 0}
//   MovePath        {"pegs": 4, "start": "0,0,1", "moves": [[disk, from, to], ...],
//                    "length": 7, "essential": true}
//   BoundReport     field names as in the struct; big integers are decimal
//                   strings, absent values are null, and gamma_formula is the
//                   string "conjectured" for p >= 5.
//
// Text move files hold one "disk from to" line per move.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hanoi/bounds.hpp"
#include "hanoi/dyadic.hpp"
#include "hanoi/numerics.hpp"
#include "hanoi/state_space.hpp"

namespace hanoi {

nlohmann::json to_json(const DyadicRational& d);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const MovePath& path);
nlohmann::json to_json(const BoundReport& report);

DyadicRational dyadic_from_json(const nlohmann::json& j);
Decomposition decomposition_from_json(const nlohmann::json& j);
MovePath move_path_from_json(const nlohmann::json& j);
BoundReport bound_report_from_json(const nlohmann::json& j);

std::string moves_to_text(const std::vector<Move>& moves);
std::vector<Move> moves_from_text(std::istream& in);

}  // namespace hanoi
