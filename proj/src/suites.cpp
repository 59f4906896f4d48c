#include "polyrep/suites.hpp"

#include "polyrep/roundtrip.hpp"
#include "polyrep/zoo.hpp"

namespace polyrep {

std::vector<LawSuite> const& law_suites() {
  static std::vector<LawSuite> const registry{
      {"zoo", false, suites::zoo},
      {"pstore", true, suites::pstore},
      {"funlist", true, suites::funlist},
      {"freepointed", false, suites::freepointed},
      {"free", true, suites::free_monad},
      {"church", true, suites::church},
      {"optics", true, suites::optics},
      {"lens-equivalence", false, suites::lens_equivalence},
      {"container", true, suites::container},
      {"container-extraction", true, suites::container_extraction},
      {"roundtrip-functor", true, [](CheckConfig const& cfg) { return roundtrip_functor_case(cfg); }},
      {"roundtrip-pointed", true, [](CheckConfig const& cfg) { return roundtrip_pointed_case(cfg); }},
      {"roundtrip-applicative", true, [](CheckConfig const& cfg) { return roundtrip_applicative_case(cfg); }},
      {"roundtrip-monad", true, [](CheckConfig const& cfg) { return roundtrip_monad_case(cfg); }},
      {"mutants", false, suites::mutants},
  };
  return registry;
}

std::vector<CheckResult> run_law_suites(std::optional<std::string> const& only, CheckConfig const& cfg) {
  return run_law_suites(only, cfg, suites::zoo);
}

std::vector<CheckResult> run_law_suites(std::optional<std::string> const& only, CheckConfig const& cfg,
                                        ZooCheck const& zoo_check) {
  std::vector<LawSuite const*> selected;
  for (auto const& s : law_suites())
    if (!only || s.name == *only) selected.push_back(&s);
  if (selected.empty()) throw UnknownSuite(*only);

  std::vector<CheckResult> out;
  std::optional<bool> zoo_valid;
  for (auto const* s : selected) {
    if (s->uses_zoo) {
      if (!zoo_valid) {
        auto const zoo_results = zoo_check(cfg);
        zoo_valid = all_passed(zoo_results);
        if (!*zoo_valid)
          for (auto const& r : zoo_results)
            if (!r.passed) out.push_back(r);
      }
      if (!*zoo_valid) {
        CheckResult skipped;
        skipped.suite = s->name;
        skipped.law = "zoo-invalid";
        skipped.passed = false;
        out.push_back(skipped);
        continue;
      }
    }
    append(out, s->run(cfg));
  }
  return out;
}

namespace suites {

std::vector<CheckResult> zoo(CheckConfig const& cfg) { return validate_zoo(make_zoo(), cfg); }

}  // namespace suites

}  // namespace polyrep
