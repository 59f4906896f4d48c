// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "polyrep/roundtrip.hpp"
#include "polyrep/suites.hpp"
#include "polyrep/teletype.hpp"

using namespace polyrep;

namespace {

constexpr double fast_limit_s = 1.0;
constexpr double slow_limit_s = 30.0;
constexpr std::size_t min_dim2_samples = 10'000;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, std::string const& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

bool starts_with(std::string const& s, std::string const& prefix) { return s.rfind(prefix, 0) == 0; }

CheckResult const* find(std::vector<CheckResult> const& rs, std::string const& suite, std::string const& law) {
  for (auto const& r : rs)
    if (r.suite == suite && r.law == law) return &r;
  return nullptr;
}

void require_all_passed(Verdict& v, std::vector<CheckResult> const& rs) {
  v.require(!rs.empty(), "no checks ran");
  for (auto const& r : rs) v.require(r.passed, format_result(r));
}

void require_cases(Verdict& v, std::vector<CheckResult> const& rs, std::string const& suite, std::string const& law,
                   std::size_t cases) {
  auto const* r = find(rs, suite, law);
  v.require(r != nullptr, suite + "/" + law + " missing");
  if (!r) return;
  v.require(r->cases == cases && !r->sampled,
            suite + "/" + law + " checked " + std::to_string(r->cases) + " cases, expected " + std::to_string(cases));
}

int failures = 0;

void report(int n, std::string const& title, std::optional<double> limit_s, std::function<Verdict()> const& body) {
  auto const t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (std::exception const& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s) v.require(secs < *limit_s, "too slow");
  char timing[64];
  if (limit_s)
    std::snprintf(timing, sizeof timing, "time=%.2fs limit=%.0fs", secs, *limit_s);
  else
    std::snprintf(timing, sizeof timing, "time=%.2fs", secs);
  std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << n << " " << title << " " << timing;
  if (!v.ok) std::cout << " (" << v.detail << ")";
  std::cout << std::endl;
  failures += !v.ok;
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  report(1, "functor-case round trip", fast_limit_s, [] {
    Verdict v;
    auto const rs = roundtrip_functor_case();
    require_all_passed(v, rs);
    require_cases(v, rs, "roundtrip-functor", "phi-after-inverse", 18);
    return v;
  });

  report(2, "pointed-case round trip", fast_limit_s, [] {
    Verdict v;
    auto const rs = roundtrip_pointed_case();
    require_all_passed(v, rs);
    require_cases(v, rs, "roundtrip-pointed", "phi-after-inverse", 21);
    return v;
  });

  report(3, "applicative-case round trip", slow_limit_s, [] {
    Verdict v;
    auto const rs = roundtrip_applicative_case();
    require_all_passed(v, rs);
    require_cases(v, rs, "roundtrip-applicative", "phi-after-inverse", 345);
    std::size_t exhaustive = 0, sampled = 0;
    for (auto const& r : rs) {
      if (r.suite == "roundtrip-applicative" && starts_with(r.law, "inverse-after-phi")) exhaustive += !r.sampled;
      if (r.suite == "roundtrip-applicative-dim2") {
        ++sampled;
        v.require(r.sampled && r.cases >= min_dim2_samples, format_result(r) + " has too few samples");
      }
    }
    v.require(exhaustive > 0, "no exhaustive dim <= 1 checks");
    v.require(sampled > 0, "no sampled dim 2 checks");
    return v;
  });

  report(4, "monad-case round trip", std::nullopt, [] {
    Verdict v;
    auto const rs = roundtrip_monad_case();
    require_all_passed(v, rs);
    require_cases(v, rs, "roundtrip-monad", "from-after-to", 202);
    v.require(find(rs, "roundtrip-monad", "to-after-from[State]") != nullptr, "no observation at State");
    return v;
  });

  report(5, "law suites and mutants", std::nullopt, [] {
    Verdict v;
    auto const rs = run_law_suites(std::nullopt);
    require_all_passed(v, rs);
    std::size_t mutants = 0;
    for (auto const& r : rs)
      if (r.suite == "mutants" && r.law.find(":same-counterexample") == std::string::npos) {
        ++mutants;
        v.require(!r.counterexample.empty(), r.law + " has no counterexample");
      }
    v.require(mutants >= 10, "too few mutants registered");
    return v;
  });

  report(6, "lens representation", std::nullopt, [] {
    Verdict v;
    auto const rs = run_law_suites(std::string("optics"));
    auto const eq = run_law_suites(std::string("lens-equivalence"));
    auto const mut = run_law_suites(std::string("mutants"));
    require_all_passed(v, rs);
    require_all_passed(v, eq);
    for (auto const* law : {"get-put", "put-get", "put-put", "counit-coalgebra", "comult-coalgebra"}) {
      v.require(find(rs, "optics/fst", law) != nullptr, std::string("fst ") + law + " missing");
      v.require(find(rs, "optics/projection", law) != nullptr, std::string("projection ") + law + " missing");
    }
    std::size_t lens_mutants = 0;
    for (auto const& r : mut)
      if (starts_with(r.law, "lens[set-ignoring]")) {
        ++lens_mutants;
        v.require(r.passed, format_result(r));
      }
    v.require(find(mut, "mutants", "lens[set-ignoring]:same-counterexample") != nullptr, "same-counterexample missing");
    v.require(lens_mutants >= 3, "set-ignoring mutant not checked against both formulations");
    return v;
  });

  report(7, "container extraction", slow_limit_s, [] {
    Verdict v;
    auto const rs = run_law_suites(std::string("container-extraction"));
    require_all_passed(v, rs);
    auto const suite = std::string("container-extraction");
    require_cases(v, rs, suite, "psi-after-phi[list]", 31);
    require_cases(v, rs, suite, "psi-after-phi[pair]", 4);
    require_cases(v, rs, suite, "psi-after-phi[vec:3]", 8);
    require_cases(v, rs, suite, "psi-after-phi[tree]", 64979);
    for (auto const& r : rs)
      if (starts_with(r.law, "traverse-commutes")) v.require(!r.sampled, r.law + " was sampled");
    return v;
  });

  report(8, "teletype golden log", std::nullopt, [] {
    Verdict v;
    auto const expected = std::string("IN a\nOUT a\nIN b\nOUT b\nIN c\nOUT c\n");
    auto const pure = run_pure(echo_n(3), U"abc");
    v.require(pure.result.has_value() && format_log(pure.log) == expected, "pure interpreter log differs");
    auto const script = parse_script(read_file(std::string(POLYREP_GOLDEN_DIR) + "/abc.script"));
    auto const replay = format_log(run_replay(echo_n(3), script).log);
    v.require(replay == expected, "replay log differs from the derived log");
    v.require(replay == read_file(std::string(POLYREP_GOLDEN_DIR) + "/echo3_abc.log"), "replay log differs from golden");

    std::vector<std::u32string> scripts{U""};
    for (std::size_t len = 1, from = 0; len <= 3; ++len) {
      auto const to = scripts.size();
      for (auto i = from; i < to; ++i)
        for (Char c : std::u32string(U"ab")) scripts.push_back(scripts[i] + c);
      from = to;
    }
    v.require(scripts.size() == 15, "wrong script enumeration");
    for (auto const& s : scripts)
      for (std::size_t n = 0; n <= s.size(); ++n) {
        auto const p = run_pure(echo_n(n), s);
        auto const r = run_replay(echo_n(n), s);
        v.require(p.result.has_value() && r.log == p.log && output_of(r.log) == p.output,
                  "replay and pure disagree on a script of length " + std::to_string(s.size()));
      }
    return v;
  });

  return failures == 0 ? 0 : 1;
}
