#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tambara/caps.hpp"

namespace tambara {

struct CaseContext {
  int index = 0;
  std::uint64_t seed = 0;
  int shrink = 0;  // shape reduction applied by the witness minimizer
  Caps caps;
};

// One falsifiable property. run returns a witness description on failure.
struct Check {
  std::string name;
  int cases = 1;
  std::function<std::optional<std::string>(const CaseContext&)> run;
  // A negative control passes when some case fails.
  bool negative = false;
  // Largest shrink level worth trying on failure.
  int max_shrink = 3;
};

struct Failure {
  std::string check;
  int index = 0;
  std::uint64_t seed = 0;
  int shrink = 0;
  std::string witness;
};

struct CheckSummary {
  std::string name;
  int cases = 0;
  int failed = 0;
  int skipped = 0;  // cases that hit a size cap
  bool negative = false;
  bool pass = true;
  std::string observed;  // first failure seen by a negative control
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  Caps caps;
  int cases = 0;
  std::vector<CheckSummary> checks;
  std::vector<Failure> failures;  // failures of positive checks only

  bool pass() const;
};

std::vector<std::string> suite_names();
std::vector<Check> suite_checks(std::string_view name);

// Throws UnknownSuite.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, const Caps& caps = {}, int threads = 0);
SuiteReport run_checks(std::string_view name, const std::vector<Check>& checks, std::uint64_t seed,
                       const Caps& caps = {}, int threads = 0);
// Replays one case exactly as the suite ran it.
std::optional<std::string> rerun_case(std::string_view suite, std::string_view check, int index, std::uint64_t seed,
                                      const Caps& caps = {}, int shrink = 0);

std::string report_text(const SuiteReport& r);
std::string report_json(const SuiteReport& r);

// Which suite and check exercise each law.
struct LawEntry {
  std::string law;
  std::string suite;
  std::string check;
};
const std::vector<LawEntry>& coverage_manifest();

}  // namespace tambara
