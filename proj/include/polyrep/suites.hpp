#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "laws.hpp"

// The registered law suites. These are compiled once (src/) so that the
// command-line tool, the tests and the acceptance binary share them.

namespace polyrep {

struct LawSuite {
  std::string name;
  bool uses_zoo;
  std::function<std::vector<CheckResult>(CheckConfig const&)> run;
};

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(std::string const& name) : std::invalid_argument("unknown suite: " + name) {}
};

std::vector<LawSuite> const& law_suites();

/// Runs one suite by name, or all of them. Suites that observe values at
/// the zoo are skipped, each with a `zoo-invalid` failure, when a zoo member
/// fails its own laws. Throws UnknownSuite for an unregistered name.
std::vector<CheckResult> run_law_suites(std::optional<std::string> const& only, CheckConfig const& cfg = {});

using ZooCheck = std::function<std::vector<CheckResult>(CheckConfig const&)>;

/// As above, with the zoo validated by `zoo_check` instead of the zoo suite.
std::vector<CheckResult> run_law_suites(std::optional<std::string> const& only, CheckConfig const& cfg,
                                        ZooCheck const& zoo_check);

namespace suites {
std::vector<CheckResult> zoo(CheckConfig const& cfg);
std::vector<CheckResult> pstore(CheckConfig const& cfg);
std::vector<CheckResult> funlist(CheckConfig const& cfg);
std::vector<CheckResult> freepointed(CheckConfig const& cfg);
std::vector<CheckResult> free_monad(CheckConfig const& cfg);
std::vector<CheckResult> church(CheckConfig const& cfg);
std::vector<CheckResult> optics(CheckConfig const& cfg);
std::vector<CheckResult> lens_equivalence(CheckConfig const& cfg);
std::vector<CheckResult> container(CheckConfig const& cfg);
std::vector<CheckResult> container_extraction(CheckConfig const& cfg);
std::vector<CheckResult> mutants(CheckConfig const& cfg);
}  // namespace suites

}  // namespace polyrep
