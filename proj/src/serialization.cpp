#include "hanoi/serialization.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace hanoi {

using nlohmann::json;

namespace {

json optional_dyadic(const std::optional<DyadicRational>& d) {
  return d ? to_json(*d) : json(nullptr);
}

std::optional<DyadicRational> optional_dyadic_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return dyadic_from_json(j);
}

BigInt bigint_from(const json& j) { return parse_bigint(j.get<std::string>()); }

}  // namespace

json to_json(const DyadicRational& d) {
  return {{"mantissa", d.mantissa().str()}, {"exponent", d.exponent()}, {"ceil", d.ceil().str()}};
}

DyadicRational dyadic_from_json(const json& j) {
  DyadicRational d(bigint_from(j.at("mantissa")), j.at("exponent").get<std::int64_t>());
  if (j.contains("ceil") && bigint_from(j.at("ceil")) != d.ceil()) {
    throw std::invalid_argument("dyadic: ceil field disagrees with mantissa/exponent");
  }
  return d;
}

json to_json(const Decomposition& d) {
  return {{"p", d.p}, {"N", d.n}, {"m", d.m}, {"t", d.t}, {"r", d.r}};
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  d.p = j.at("p").get<int>();
  d.n = j.at("N").get<std::uint64_t>();
  d.m = j.at("m").get<std::uint64_t>();
  d.t = j.at("t").get<std::uint64_t>();
  d.r = j.at("r").get<std::uint64_t>();
  if (!is_valid(d)) throw std::invalid_argument("decomposition: invariants violated");
  return d;
}

json to_json(const MovePath& path) {
  json moves = json::array();
  for (const auto& m : path.moves) moves.push_back({m.disk, m.from, m.to});
  return {{"pegs", path.start.pegs()},
          {"start", path.start.to_string()},
          {"moves", std::move(moves)},
          {"length", path.length()},
          {"essential", is_essential(path)}};
}

MovePath move_path_from_json(const json& j) {
  MovePath path;
  path.start = Configuration::parse(j.at("start").get<std::string>(), j.at("pegs").get<int>());
  for (const auto& m : j.at("moves")) {
    path.moves.push_back({m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<int>()});
  }
  if (j.contains("length") && j.at("length").get<std::size_t>() != path.length()) {
    throw std::invalid_argument("path: length field disagrees with move list");
  }
  path.replay();
  return path;
}

json to_json(const BoundReport& r) {
  json j;
  j["p"] = r.p;
  j["N"] = r.n;
  j["chen_shen"] = optional_dyadic(r.chen_shen);
  j["main2"] = optional_dyadic(r.main2);
  j["trivial_n"] = r.trivial_n;
  j["dp_lower"] = r.dp_lower ? json(r.dp_lower->str()) : json(nullptr);
  j["gamma_formula"] = r.gamma_formula ? r.gamma_formula->str() : std::string("conjectured");
  j["gamma_conjecture"] = r.gamma_conjecture.str();
  j["phi_upper"] = r.phi_upper.str();
  j["gamma_upper_general"] = optional_dyadic(r.gamma_upper_general);
  return j;
}

BoundReport bound_report_from_json(const json& j) {
  BoundReport r;
  r.p = j.at("p").get<int>();
  r.n = j.at("N").get<std::uint64_t>();
  r.chen_shen = optional_dyadic_from(j.at("chen_shen"));
  r.main2 = optional_dyadic_from(j.at("main2"));
  r.trivial_n = j.at("trivial_n").get<std::uint64_t>();
  if (!j.at("dp_lower").is_null()) r.dp_lower = bigint_from(j.at("dp_lower"));
  if (const auto g = j.at("gamma_formula").get<std::string>(); g != "conjectured") {
    r.gamma_formula = parse_bigint(g);
  }
  r.gamma_conjecture = bigint_from(j.at("gamma_conjecture"));
  r.phi_upper = bigint_from(j.at("phi_upper"));
  r.gamma_upper_general = optional_dyadic_from(j.at("gamma_upper_general"));
  return r;
}

std::string moves_to_text(const std::vector<Move>& moves) {
  std::string out;
  for (const auto& m : moves) {
    out += std::to_string(m.disk) + ' ' + std::to_string(m.from) + ' ' + std::to_string(m.to) + '\n';
  }
  return out;
}

std::vector<Move> moves_from_text(std::istream& in) {
  std::vector<Move> moves;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    Move m;
    std::string extra;
    if (!(fields >> m.disk >> m.from >> m.to) || (fields >> extra)) {
      throw std::invalid_argument("move file line " + std::to_string(line_no) +
                                  ": expected 'disk from to'");
    }
    moves.push_back(m);
  }
  return moves;
}

}  // namespace hanoi
