#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dbw {

// Size budget for a harness run. scale 0 is a quick smoke pass, 1 the full
// battery, 2 an extended run; exact_cap/oracle_cap bound the width engines.
struct VerifyBudget {
  int exact_cap = 16;
  int oracle_cap = 8;
  int scale = 1;
};

struct CheckResult {
  std::string name;
  std::string claim;
  int attempted = 0;
  int failed = 0;
  double seconds = 0.0;
  std::string note;
  // Offending instances in the shared text graph format (capped at five).
  std::vector<std::string> counterexamples;

  bool ok() const { return failed == 0; }
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

// The known check names, C1 through C13.
const std::vector<std::string>& known_checks();

// Runs the named checks ("all" expands to every known check). Each check
// derives its own rng stream from (seed, name), so suite composition does
// not disturb per-check instances. Throws UnknownCheckError for bad names.
Report run_checks(const std::vector<std::string>& suite,
                  const VerifyBudget& budget = {}, std::uint64_t seed = 0);

std::string format_report_text(const Report& r);
std::string format_report_structured(const Report& r);

}  // namespace dbw
