// hanoi: compute, construct and verify multi-peg Tower of Hanoi quantities.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap exceeded.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hanoi/bfs_cache.hpp"
#include "hanoi/bounds.hpp"
#include "hanoi/constructions.hpp"
#include "hanoi/errors.hpp"
#include "hanoi/frame_stewart.hpp"
#include "hanoi/potential.hpp"
#include "hanoi/serialization.hpp"
#include "hanoi/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::optional<std::uint64_t> cap;
  std::optional<std::uint64_t> product_cap;
  bool no_cache = false;
  std::string cache_file;
};

struct Session {
  hanoi::SearchLimits limits;
  std::unique_ptr<hanoi::BfsCache> cache;
  std::unique_ptr<hanoi::ExactOracle> oracle;

  explicit Session(const GlobalOptions& g) {
    if (const char* env = std::getenv("HANOI_BFS_CAP")) {
      try {
        limits.max_states = std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError("HANOI_BFS_CAP is not a number: " + std::string(env));
      }
    }
    if (g.cap) limits.max_states = *g.cap;
    if (g.product_cap) limits.max_product_states = *g.product_cap;
    if (!g.no_cache) {
      const auto file = g.cache_file.empty() ? hanoi::BfsCache::default_directory() / "bfs-cache.json"
                                             : std::filesystem::path(g.cache_file);
      cache = std::make_unique<hanoi::BfsCache>(file);
    }
    oracle = std::make_unique<hanoi::ExactOracle>(limits, cache.get());
  }

  ~Session() {
    if (cache) cache->flush();
  }
};

std::string show(const hanoi::DyadicRational& d) {
  return d.to_string() + " (ceil " + d.ceil().str() + ")";
}

std::string show(const std::optional<hanoi::DyadicRational>& d) { return d ? show(*d) : "-"; }
std::string show(const std::optional<hanoi::BigInt>& b) { return b ? b->str() : "-"; }

hanoi::BigInt gamma_formula_value(int p, std::uint64_t n) {
  if (p == 3) return hanoi::gamma3_formula(n);
  if (p == 4) return hanoi::gamma4_formula(n);
  return hanoi::gamma_conjecture(p, n);
}

// ---- subcommands ----------------------------------------------------------

struct PhiArgs {
  int pegs = 4;
  std::uint64_t disks = 0;
  std::string method = "recursive";
};

int cmd_phi(const PhiArgs& a) {
  if (a.method == "closed" && a.pegs != 4) throw UsageError("--method closed needs --pegs 4");
  if (a.method == "closed" && a.disks == 0) throw UsageError("--method closed needs --disks >= 1");
  if (a.method == "recursive") {
    std::cout << hanoi::phi_recursive(a.pegs, a.disks) << '\n';
  } else if (a.method == "spectrum") {
    std::cout << hanoi::phi_spectrum(a.pegs, a.disks) << '\n';
  } else if (a.method == "closed") {
    std::cout << hanoi::phi4_closed(a.disks) << '\n';
  } else {
    const hanoi::BigInt rec = hanoi::phi_recursive(a.pegs, a.disks);
    const hanoi::BigInt spectrum = hanoi::phi_spectrum(a.pegs, a.disks);
    bool agree = rec == spectrum;
    std::cout << "recursive " << rec << '\n' << "spectrum  " << spectrum << '\n';
    if (a.pegs == 4 && a.disks >= 1) {
      const hanoi::BigInt closed = hanoi::phi4_closed(a.disks);
      agree = agree && closed == rec;
      std::cout << "closed    " << closed << '\n';
    }
    if (!agree) {
      std::cout << "MISMATCH between methods\n";
      return kExitVerifyFailed;
    }
  }
  return kExitOk;
}

struct GammaArgs {
  int pegs = 4;
  std::uint64_t disks = 0;
  bool exact = false;
};

int cmd_gamma(const GammaArgs& a, Session& s) {
  const hanoi::BigInt formula = gamma_formula_value(a.pegs, a.disks);
  const bool proven = a.pegs <= 4;
  std::cout << (proven ? "formula     " : "conjectured ") << formula << '\n';
  if (!a.exact) return kExitOk;
  if (a.disks > static_cast<std::uint64_t>(hanoi::kMaxDisks)) throw UsageError("--exact supports at most 30 disks");
  const std::uint64_t exact = s.oracle->gamma(a.pegs, static_cast<int>(a.disks));
  std::cout << "exact       " << exact << '\n';
  if (exact == formula) return kExitOk;
  if (!proven) {
    std::cout << "FINDING: conjectured value differs from exact\n";
    return kExitOk;
  }
  std::cout << "MISMATCH: formula differs from exact\n";
  return kExitVerifyFailed;
}

struct BoundsArgs {
  int pegs = 4;
  std::uint64_t disks = 0;
  bool json = false;
};

int cmd_bounds(const BoundsArgs& a) {
  const auto r = hanoi::bound_report(a.pegs, a.disks);
  if (a.json) {
    std::cout << hanoi::to_json(r).dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "p                    " << r.p << '\n'
            << "N                    " << r.n << '\n'
            << "chen_shen            " << show(r.chen_shen) << '\n'
            << "main2                " << show(r.main2) << '\n'
            << "trivial_n            " << r.trivial_n << '\n'
            << "dp_lower             " << show(r.dp_lower) << '\n'
            << "gamma_formula        " << (r.conjectured() ? std::string("conjectured") : r.gamma_formula->str()) << '\n'
            << "gamma_conjecture     " << r.gamma_conjecture << '\n'
            << "phi_upper            " << r.phi_upper << '\n'
            << "gamma_upper_general  " << show(r.gamma_upper_general) << '\n';
  return kExitOk;
}

struct DecomposeArgs {
  int pegs = 4;
  std::uint64_t disks = 1;
  bool json = false;
};

int cmd_decompose(const DecomposeArgs& a) {
  if (a.pegs < 4) throw UsageError("decompose needs --pegs >= 4");
  if (a.disks < 1) throw UsageError("decompose needs --disks >= 1");
  const auto d = hanoi::decompose(a.pegs, a.disks);
  if (a.json) {
    std::cout << hanoi::to_json(d).dump() << '\n';
  } else {
    std::cout << "m=" << d.m << " t=" << d.t << " r=" << d.r << '\n';
  }
  return kExitOk;
}

struct PsiArgs {
  std::string set;
  std::optional<std::uint64_t> level;
  bool argmax = false;
};

int cmd_psi(const PsiArgs& a) {
  const auto e = hanoi::DiskSet::parse(a.set);
  if (a.level) {
    std::cout << hanoi::psi_L(e, *a.level) << '\n';
  } else {
    std::cout << hanoi::psi(e) << '\n';
    if (a.argmax) std::cout << "argmax " << hanoi::psi_argmax(e) << '\n';
  }
  return kExitOk;
}

struct DistanceArgs {
  int pegs = 4;
  std::string from;
  std::string to;
};

int cmd_distance(const DistanceArgs& a, Session& s) {
  const auto u = hanoi::Configuration::parse(a.from, a.pegs);
  const auto v = hanoi::Configuration::parse(a.to, a.pegs);
  if (u.disks() != v.disks()) throw UsageError("--from and --to have different disk counts");
  std::cout << hanoi::distance(u, v, s.limits) << '\n';
  return kExitOk;
}

struct ConstructArgs {
  std::string kind = "main1";
  int disks = 3;
  bool json = false;
  bool verify = false;
};

int cmd_construct(const ConstructArgs& a, Session& s) {
  hanoi::MovePath path;
  std::optional<hanoi::BigInt> expected_length;
  std::optional<hanoi::Configuration> target;
  bool want_essential = false;
  if (a.kind == "main1") {
    path = hanoi::main1_essential_path(a.disks);
    expected_length = hanoi::gamma4_formula(static_cast<std::uint64_t>(a.disks));
    want_essential = true;
  } else if (a.kind == "two1") {
    const auto pair = hanoi::two1_tight_pair(a.disks);
    path = pair.path;
    target = pair.v;
    expected_length = 1 + (hanoi::phi_spectrum(4, static_cast<std::uint64_t>(a.disks) + 2) - 5) / 4;
  } else {
    path = hanoi::midpoint_path(a.disks, 0, {3, 2}, 1);
    expected_length = (hanoi::phi_spectrum(4, static_cast<std::uint64_t>(a.disks) + 1) - 1) / 2;
  }

  if (a.json) {
    std::cout << hanoi::to_json(path).dump(2) << '\n';
  } else {
    std::cout << hanoi::moves_to_text(path.moves);
  }
  if (!a.verify) return kExitOk;

  std::vector<std::string> problems;
  const auto end = path.replay();
  if (target && end != *target) problems.push_back("end configuration differs from target");
  if (expected_length && hanoi::BigInt(path.length()) != *expected_length) {
    problems.push_back("length " + std::to_string(path.length()) + " != " + expected_length->str());
  }
  if (want_essential && !hanoi::is_essential(path)) problems.push_back("path is not essential");
  if (a.kind == "two1" || a.kind == "midpoint") {
    // Optimality against the oracle: no shorter path joins the endpoints.
    if (hanoi::distance(path.start, end, s.limits) != path.length()) {
      problems.push_back("a shorter path joins the endpoints");
    }
  } else if (a.kind == "main1") {
    if (s.oracle->gamma(4, a.disks) != path.length()) problems.push_back("exact Gamma differs from length");
  }
  std::cerr << "start " << path.start.to_string() << '\n' << "end   " << end.to_string() << '\n';
  for (const auto& p : problems) std::cerr << "FAIL: " << p << '\n';
  if (problems.empty()) std::cerr << "verified: " << a.kind << " N=" << a.disks << " length " << path.length() << '\n';
  return problems.empty() ? kExitOk : kExitVerifyFailed;
}

struct VerifyArgs {
  std::string suite;
  std::optional<int> max_disks;
  std::uint64_t seed = hanoi::VerifyOptions{}.seed;
  std::string format = "text";
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_verify(const VerifyArgs& a, Session& s) {
  hanoi::VerifyOptions opts;
  opts.max_disks = a.max_disks;
  opts.seed = a.seed;
  std::vector<std::string> suites;
  if (a.suite == "all") {
    suites = hanoi::suite_names();
  } else {
    suites.push_back(a.suite);
  }

  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  if (a.format == "csv") std::cout << "suite,key,status,detail\n";
  for (const auto& name : suites) {
    const auto report = hanoi::run_suite(name, *s.oracle, opts);
    ok = ok && report.passed();
    if (a.format == "json") {
      nlohmann::json cases = nlohmann::json::array();
      for (const auto& c : report.cases) {
        cases.push_back({{"key", c.key}, {"status", hanoi::to_string(c.status)}, {"detail", c.detail}});
      }
      reports.push_back({{"suite", report.suite}, {"passed", report.passed()}, {"cases", cases}});
      continue;
    }
    if (a.format == "csv") {
      for (const auto& c : report.cases) {
        std::cout << report.suite << ',' << csv_field(c.key) << ',' << hanoi::to_string(c.status) << ','
                  << csv_field(c.detail) << '\n';
      }
      continue;
    }
    for (const auto& c : report.cases) {
      std::cout << hanoi::to_string(c.status) << "  " << report.suite << ' ' << c.key;
      if (!c.detail.empty()) std::cout << "  " << c.detail;
      std::cout << '\n';
    }
    const auto pass = report.count(hanoi::CaseStatus::kPass);
    std::cout << report.suite << ": " << pass << '/' << report.cases.size() << " PASS, "
              << report.count(hanoi::CaseStatus::kFail) << " FAIL, "
              << report.count(hanoi::CaseStatus::kSkipped) << " SKIPPED, "
              << report.count(hanoi::CaseStatus::kFinding) << " FINDING\n";
  }
  if (a.format == "json") std::cout << reports.dump(2) << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multi-peg Tower of Hanoi numerics, bounds, constructions and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--cap", global.cap, "Maximum number of states a single search may visit (env HANOI_BFS_CAP)");
  app.add_option("--product-cap", global.product_cap, "Maximum number of product states for exact Gamma");
  app.add_flag("--no-cache", global.no_cache, "Do not read or write the BFS result cache");
  app.add_option("--cache-file", global.cache_file, "Cache file (default: $HANOI_CACHE_DIR/bfs-cache.json)");

  const auto pegs_check = CLI::Range(hanoi::kMinPegs, 64);
  const auto bfs_pegs = CLI::Range(hanoi::kMinPegs, hanoi::kMaxPegs);

  PhiArgs phi;
  auto* phi_cmd = app.add_subcommand("phi", "Frame-Stewart number Phi(p, N)");
  phi_cmd->add_option("--pegs,-p", phi.pegs)->required()->check(pegs_check);
  phi_cmd->add_option("--disks,-n", phi.disks)->required();
  phi_cmd->add_option("--method", phi.method)->check(CLI::IsMember({"recursive", "spectrum", "closed", "all"}));

  GammaArgs gamma;
  auto* gamma_cmd = app.add_subcommand("gamma", "Shortest essential path length Gamma(p, N)");
  gamma_cmd->add_option("--pegs,-p", gamma.pegs)->required()->check(pegs_check);
  gamma_cmd->add_option("--disks,-n", gamma.disks)->required();
  gamma_cmd->add_flag("--exact", gamma.exact, "Also compute the exact value by search");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "All lower and upper bounds for (p, N)");
  bounds_cmd->add_option("--pegs,-p", bounds.pegs)->required()->check(pegs_check);
  bounds_cmd->add_option("--disks,-n", bounds.disks)->required();
  bounds_cmd->add_flag("--json", bounds.json);

  DecomposeArgs decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "Write N as Delta_p(m) + Delta_{p-2}(t+1) + r");
  decompose_cmd->add_option("--pegs,-p", decompose.pegs)->required()->check(pegs_check);
  decompose_cmd->add_option("--disks,-n", decompose.disks)->required();
  decompose_cmd->add_flag("--json", decompose.json);

  PsiArgs psi;
  auto* psi_cmd = app.add_subcommand("psi", "Potential Psi(E) of a disk set");
  psi_cmd->add_option("--set,-s", psi.set, "Comma-separated disk labels, e.g. 0,2,5")->required();
  psi_cmd->add_option("--level,-L", psi.level, "Evaluate Psi_L at this level only");
  psi_cmd->add_flag("--argmax", psi.argmax, "Also print the smallest maximizing level");

  DistanceArgs dist;
  auto* dist_cmd = app.add_subcommand("distance", "Shortest path between two configurations");
  dist_cmd->add_option("--pegs,-p", dist.pegs)->required()->check(bfs_pegs);
  dist_cmd->add_option("--from", dist.from, "Peg of each disk, smallest first, e.g. 0,0,1")->required();
  dist_cmd->add_option("--to", dist.to)->required();

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Emit an explicit move sequence");
  construct_cmd->add_option("--kind", construct.kind)->check(CLI::IsMember({"main1", "two1", "midpoint"}));
  construct_cmd->add_option("--disks,-n", construct.disks)->required()->check(CLI::Range(1, hanoi::kMaxDisks));
  construct_cmd->add_flag("--json", construct.json);
  construct_cmd->add_flag("--verify", construct.verify, "Replay and check the path against the oracle");

  VerifyArgs verify;
  std::vector<std::string> suite_choices = hanoi::suite_names();
  suite_choices.push_back("all");
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", verify.suite)->required()->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--max-disks", verify.max_disks)->check(CLI::Range(0, hanoi::kMaxDisks));
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*phi_cmd) return cmd_phi(phi);
    if (*bounds_cmd) return cmd_bounds(bounds);
    if (*decompose_cmd) return cmd_decompose(decompose);
    if (*psi_cmd) return cmd_psi(psi);

    Session session(global);
    if (*gamma_cmd) return cmd_gamma(gamma, session);
    if (*dist_cmd) return cmd_distance(dist, session);
    if (*construct_cmd) return cmd_construct(construct, session);
    if (*verify_cmd) return cmd_verify(verify, session);
  } catch (const hanoi::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
