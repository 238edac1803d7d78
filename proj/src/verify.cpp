#include "hanoi/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hanoi/bounds.hpp"
#include "hanoi/constructions.hpp"
#include "hanoi/errors.hpp"
#include "hanoi/frame_stewart.hpp"
#include "hanoi/potential.hpp"

namespace hanoi {

const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::kPass: return "PASS";
    case CaseStatus::kFail: return "FAIL";
    case CaseStatus::kSkipped: return "SKIPPED";
    case CaseStatus::kFinding: return "FINDING";
  }
  return "?";
}

std::size_t SuiteReport::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  void check(std::string key, bool ok, std::string detail = {}) {
    add(std::move(key), ok ? CaseStatus::kPass : CaseStatus::kFail, std::move(detail));
  }
  void add(std::string key, CaseStatus status, std::string detail = {}) {
    report_.cases.push_back({std::move(key), status, std::move(detail)});
  }
  /// Runs body; a CapExceeded inside becomes a SKIPPED case.
  void guarded(const std::string& key, const std::function<void()>& body) {
    try {
      body();
    } catch (const CapExceeded& e) {
      add(key, CaseStatus::kSkipped, e.what());
    } catch (const std::exception& e) {
      add(key, CaseStatus::kFail, std::string("error: ") + e.what());
    }
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::string pn(int p, int n) { return "p=" + std::to_string(p) + " N=" + std::to_string(n); }

template <typename A, typename B>
std::string versus(const A& got, const B& want) {
  std::ostringstream s;
  s << "got " << got << ", expected " << want;
  return s.str();
}

DiskSet random_set(std::mt19937_64& rng, std::uint64_t bound, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
  std::uniform_int_distribution<std::uint64_t> label(0, bound - 1);
  std::vector<std::uint64_t> labels(size_dist(rng));
  for (auto& x : labels) x = label(rng);
  return DiskSet::from_unsorted(std::move(labels));
}

Configuration random_on(std::mt19937_64& rng, int disks, std::array<int, 2> pegs) {
  std::uniform_int_distribution<int> pick(0, 1);
  std::vector<std::uint8_t> peg_of(static_cast<std::size_t>(disks));
  for (auto& x : peg_of) x = static_cast<std::uint8_t>(pegs[static_cast<std::size_t>(pick(rng))]);
  return Configuration(4, std::move(peg_of));
}

// -- phi ---------------------------------------------------------------------

SuiteReport suite_phi(ExactOracle&, const VerifyOptions& opt) {
  Recorder rec("phi");
  const int max_n = opt.max_disks.value_or(300);
  FrameStewartTable table;
  for (int p = 3; p <= 10; ++p) {
    const std::string key = "recursive=spectrum p=" + std::to_string(p) + " N<=" + std::to_string(max_n);
    rec.guarded(key, [&] {
      for (int n = 0; n <= max_n; ++n) {
        const BigInt a = table.phi(p, static_cast<std::uint64_t>(n));
        const BigInt b = phi_spectrum(p, static_cast<std::uint64_t>(n));
        if (a != b) return rec.check(key, false, "N=" + std::to_string(n) + ": " + versus(a, b));
      }
      rec.check(key, true);
    });
  }
  const int closed_max = std::max(2000, max_n);
  const std::string closed_key = "spectrum=closed p=4 N<=" + std::to_string(closed_max);
  rec.guarded(closed_key, [&] {
    for (int n = 1; n <= closed_max; ++n) {
      const BigInt a = phi_spectrum(4, static_cast<std::uint64_t>(n));
      const BigInt b = phi4_closed(static_cast<std::uint64_t>(n));
      if (a != b) return rec.check(closed_key, false, "N=" + std::to_string(n) + ": " + versus(a, b));
    }
    rec.check(closed_key, true);
  });
  const std::string mono_key = "monotone in N and p";
  rec.guarded(mono_key, [&] {
    for (int p = 3; p <= 9; ++p) {
      for (int n = 0; n < max_n; ++n) {
        const auto un = static_cast<std::uint64_t>(n);
        if (!(table.phi(p, un) < table.phi(p, un + 1)) || table.phi(p + 1, un) > table.phi(p, un)) {
          return rec.check(mono_key, false, pn(p, n));
        }
      }
    }
    rec.check(mono_key, true);
  });
  for (int q = 3; q <= 5; ++q) {
    const std::string key = "path replay q=" + std::to_string(q);
    rec.guarded(key, [&] {
      std::vector<int> pegs(static_cast<std::size_t>(q));
      for (int i = 0; i < q; ++i) pegs[static_cast<std::size_t>(i)] = i;
      for (int n = 0; n <= std::min(max_n, 15); ++n) {
        const MovePath path = frame_stewart_path(n, pegs, 0, q - 1);
        const Configuration end = path.replay();
        const bool ok = end == Configuration::all_on(q, n, q - 1) &&
                        BigInt(path.length()) == phi_spectrum(q, static_cast<std::uint64_t>(n));
        if (!ok) return rec.check(key, false, "N=" + std::to_string(n));
      }
      rec.check(key, true);
    });
  }
  return rec.take();
}

// -- exact Gamma and H against formulas ---------------------------------------

SuiteReport suite_szegedy(ExactOracle& oracle, const VerifyOptions& opt) {
  Recorder rec("szegedy");
  for (int n = 0; n <= opt.max_disks.value_or(9); ++n) {
    rec.guarded(pn(3, n), [&] {
      const std::uint64_t got = oracle.gamma(3, n);
      const BigInt want = gamma3_formula(static_cast<std::uint64_t>(n));
      rec.check(pn(3, n), BigInt(got) == want, versus(got, want));
    });
  }
  return rec.take();
}

SuiteReport suite_main1(ExactOracle& oracle, const VerifyOptions& opt) {
  Recorder rec("main1");
  const int max_n = opt.max_disks.value_or(7);
  for (int n = 0; n <= max_n; ++n) {
    rec.guarded(pn(4, n), [&] {
      const std::uint64_t got = oracle.gamma(4, n);
      const BigInt want = gamma4_formula(static_cast<std::uint64_t>(n));
      rec.check(pn(4, n), BigInt(got) == want, versus(got, want));
    });
  }
  for (int n = 3; n <= std::max(20, max_n); ++n) {
    const std::string key = "construction N=" + std::to_string(n);
    rec.guarded(key, [&] {
      const MovePath path = main1_essential_path(n);
      path.replay();
      const BigInt want = gamma4_formula(static_cast<std::uint64_t>(n));
      bool ok = is_essential(path) && BigInt(path.length()) == want;
      std::string detail = versus(path.length(), want);
      if (ok && n <= max_n) {
        const std::uint64_t exact = oracle.gamma(4, n);
        ok = exact == path.length();
        detail += ", exact " + std::to_string(exact);
      }
      rec.check(key, ok, detail);
    });
  }
  return rec.take();
}

SuiteReport suite_bousch_h4(ExactOracle& oracle, const VerifyOptions& opt) {
  Recorder rec("bousch-h4");
  for (int n = 1; n <= opt.max_disks.value_or(10); ++n) {
    rec.guarded(pn(4, n), [&] {
      const std::uint64_t got = oracle.H(4, n);
      const BigInt want = phi4_closed(static_cast<std::uint64_t>(n));
      rec.check(pn(4, n), BigInt(got) == want, versus(got, want));
    });
  }
  return rec.take();
}

SuiteReport suite_conjecture5(ExactOracle& oracle, const VerifyOptions& opt) {
  Recorder rec("conjecture5");
  for (int n = 0; n <= opt.max_disks.value_or(5); ++n) {
    const auto un = static_cast<std::uint64_t>(n);
    rec.guarded(pn(5, n), [&] {
      const std::uint64_t got = oracle.gamma(5, n);
      const BigInt g = got;
      bool hard = g >= un && (n > 3 || g == un) && g >= dp_lower_bound(5, un);
      if (n >= 1) hard = hard && DyadicRational(g) >= main2_bound(5, un);
      rec.check(pn(5, n) + " bounds", hard, "exact " + std::to_string(got));
      const BigInt conj = gamma_conjecture(5, un);
      rec.add(pn(5, n) + " conjecture", conj == g ? CaseStatus::kPass : CaseStatus::kFinding,
              versus(got, conj));
    });
  }
  return rec.take();
}

// -- potential and lemma inequalities -----------------------------------------

SuiteReport suite_lemmas(ExactOracle& oracle, const VerifyOptions& opt) {
  Recorder rec("lemmas");
  const int max_n = opt.max_disks.value_or(6);
  std::mt19937_64 rng(opt.seed);
  FrameStewartTable table;

  rec.guarded("psi([N]) identities N<=200", [&] {
    for (std::uint64_t n = 2; n <= 200; ++n) {
      const BigInt half = (table.phi(4, n + 1) - 1) / 2;
      BigInt split = table.phi(4, 1) + table.phi(3, n - 1);
      for (std::uint64_t a = 2; a < n; ++a) split = std::min(split, table.phi(4, a) + table.phi(3, n - a));
      if (psi(DiskSet::range(n)) != half || split != half) {
        return rec.check("psi([N]) identities N<=200", false, "N=" + std::to_string(n));
      }
    }
    rec.check("psi([N]) identities N<=200", true);
  });

  rec.guarded("removal bound x1000", [&] {
    std::uniform_int_distribution<std::uint64_t> s_dist(0, 20);
    int applicable = 0;
    int tries = 0;
    while (applicable < 1000) {
      if (++tries > 1'000'000) return rec.check("removal bound x1000", false, "too few applicable draws");
      const DiskSet a_set = random_set(rng, 200, 30);
      if (a_set.empty()) continue;
      const std::uint64_t s = s_dist(rng);
      std::uniform_int_distribution<std::size_t> pick(0, a_set.size() - 1);
      const std::uint64_t a = a_set.elements()[pick(rng)];
      const LemmaCheck r = check_removal_bound(a_set, s, a);
      if (r == LemmaCheck::kNotApplicable) continue;
      ++applicable;
      if (r == LemmaCheck::kFails) {
        return rec.check("removal bound x1000", false, "A={" + a_set.to_string() + "} s=" +
                                                           std::to_string(s) + " a=" + std::to_string(a));
      }
    }
    rec.check("removal bound x1000", true);
  });

  rec.guarded("union bound x1000", [&] {
    for (int i = 0; i < 1000; ++i) {
      const DiskSet a = random_set(rng, 200, 40);
      const DiskSet b = random_set(rng, 200, 40);
      if (!check_union_bound(a, b)) {
        return rec.check("union bound x1000", false, "A={" + a.to_string() + "} B={" + b.to_string() + "}");
      }
    }
    rec.check("union bound x1000", true);
  });

  rec.guarded("Bousch inequality x100", [&] {
    std::uniform_int_distribution<int> n_dist(1, std::max(1, max_n));
    std::uniform_int_distribution<int> peg(0, 3);
    for (int i = 0; i < 100; ++i) {
      const int n = n_dist(rng);
      std::vector<std::uint8_t> u_pegs(static_cast<std::size_t>(n));
      for (auto& x : u_pegs) x = static_cast<std::uint8_t>(peg(rng));
      const int a = peg(rng);
      int b = peg(rng);
      while (b == a) b = peg(rng);
      std::array<int, 2> rest{};
      for (int x = 0, k = 0; x < 4; ++x) {
        if (x != a && x != b) rest[static_cast<std::size_t>(k++)] = x;
      }
      const Configuration u(4, std::move(u_pegs));
      const Configuration v = random_on(rng, n, rest);
      if (!check_bousch_inequality(u, v, a, oracle.limits())) {
        return rec.check("Bousch inequality x100", false, "u=" + u.to_string() + " v=" + v.to_string());
      }
    }
    rec.check("Bousch inequality x100", true);
  });

  for (int n = 2; n <= max_n; ++n) {
    const std::string key = "two-empty-peg tightness N=" + std::to_string(n);
    rec.guarded(key, [&] {
      const TightPair pair = two1_tight_pair(n);
      const std::uint64_t d = distance(pair.u, pair.v, oracle.limits());
      rec.check(key, d == pair.path.length(), versus(d, pair.path.length()));
    });
  }

  rec.guarded("two-empty-peg lower bound sampled", [&] {
    for (int n = 1; n <= max_n; ++n) {
      const BigInt bound = 1 + (table.phi(4, static_cast<std::uint64_t>(n) + 2) - 5) / 4;
      for (int i = 0; i < 20; ++i) {
        const Configuration u = random_on(rng, n, {0, 1});
        const Configuration v = random_on(rng, n, {2, 3});
        if (BigInt(distance(u, v, oracle.limits())) < bound) {
          return rec.check("two-empty-peg lower bound sampled", false, "u=" + u.to_string() + " v=" + v.to_string());
        }
      }
    }
    rec.check("two-empty-peg lower bound sampled", true);
  });

  rec.guarded("midpoint length N<=15", [&] {
    for (int n = 1; n <= 15; ++n) {
      const MovePath path = midpoint_path(n, 0, {3, 2}, 1);
      const Configuration end = path.replay();
      const bool ok = end.peg_empty(0) && end.peg_empty(1) &&
                      BigInt(path.length()) == (table.phi(4, static_cast<std::uint64_t>(n) + 1) - 1) / 2;
      if (!ok) return rec.check("midpoint length N<=15", false, "N=" + std::to_string(n));
    }
    rec.check("midpoint length N<=15", true);
  });
  return rec.take();
}

// -- bounds sandwich -----------------------------------------------------------

SuiteReport suite_bounds_sandwich(ExactOracle& oracle, const VerifyOptions& opt) {
  Recorder rec("bounds-sandwich");
  const std::map<int, int> grid{{3, 9}, {4, 10}, {5, 5}};
  for (const auto& [p, default_max] : grid) {
    const int max_n = std::min(default_max, opt.max_disks.value_or(default_max));
    for (int n = 1; n <= max_n; ++n) {
      const auto un = static_cast<std::uint64_t>(n);
      const std::string key = pn(p, n);
      rec.guarded(key + " H", [&] {
        const BigInt h = oracle.H(p, n);
        rec.check(key + " chen_shen<=H", chen_shen_bound(p, un) <= DyadicRational(h),
                  chen_shen_bound(p, un).to_string() + " vs " + h.str());
      });
      rec.guarded(key + " Gamma", [&] {
        const BigInt g = oracle.gamma(p, n);
        bool ok = g >= un;
        std::string detail = "Gamma=" + g.str();
        if (p >= 4) {
          const BigInt dp = dp_lower_bound(p, un);
          ok = ok && main2_bound(p, un) <= DyadicRational(dp) && dp <= g;
          detail += " dp=" + dp.str() + " main2=" + main2_bound(p, un).to_string();
        }
        if (n >= p - 1) {
          ok = ok && DyadicRational(g) <= gamma_upper_general(p, un);
          detail += " upper=" + gamma_upper_general(p, un).to_string();
        }
        const BigInt h = oracle.H(p, n);
        ok = ok && g <= h;
        rec.check(key + " sandwich", ok, detail);
      });
    }
  }

  rec.guarded("recursive Gamma inequality", [&] {
    for (const auto& [p, max_n] : std::map<int, int>{{4, 7}, {5, 5}}) {
      for (int n = 2; n <= std::min(max_n, opt.max_disks.value_or(max_n)); ++n) {
        const std::uint64_t g = oracle.gamma(p, n);
        for (int l = 1; l < n; ++l) {
          const std::uint64_t rhs = 2 * std::min(oracle.gamma(p, n - l), oracle.gamma(p - 1, l));
          if (g < rhs) {
            return rec.check("recursive Gamma inequality", false, pn(p, n) + " l=" + std::to_string(l));
          }
        }
      }
    }
    rec.check("recursive Gamma inequality", true);
  });

  rec.guarded("half-midpoint inequality N<=500", [&] {
    FrameStewartTable table;
    for (std::uint64_t n = 1; n <= 500; ++n) {
      if (2 * table.phi(4, n + 1) - 2 < table.phi(4, n + 2) - 1) {
        return rec.check("half-midpoint inequality N<=500", false, "N=" + std::to_string(n));
      }
    }
    rec.check("half-midpoint inequality N<=500", true);
  });

  rec.guarded("dp>=main2 5<=p<=7 N<=300", [&] {
    for (int p = 5; p <= 7; ++p) {
      const auto rows = dp_lower_bound_table(p, 300);
      for (std::uint64_t n = 1; n <= 300; ++n) {
        if (DyadicRational(rows.back()[n]) < main2_bound(p, n)) {
          return rec.check("dp>=main2 5<=p<=7 N<=300", false, pn(p, static_cast<int>(n)));
        }
      }
    }
    rec.check("dp>=main2 5<=p<=7 N<=300", true);
  });
  return rec.take();
}

using SuiteFn = SuiteReport (*)(ExactOracle&, const VerifyOptions&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"phi", suite_phi},
      {"szegedy", suite_szegedy},
      {"main1", suite_main1},
      {"bousch-h4", suite_bousch_h4},
      {"conjecture5", suite_conjecture5},
      {"lemmas", suite_lemmas},
      {"bounds-sandwich", suite_bounds_sandwich},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"phi",         "szegedy", "main1",          "bousch-h4",
                                              "conjecture5", "lemmas",  "bounds-sandwich"};
  return names;
}

SuiteReport run_suite(const std::string& name, ExactOracle& oracle, const VerifyOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(oracle, options);
}

}  // namespace hanoi
