#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chordal {

struct SelftestOptions {
  std::uint64_t seed = 1;
  // Overrides every random case count; exhaustive sweeps always run in full.
  std::optional<std::size_t> cases;
};

struct SuiteResult {
  int id = 0;
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  double seconds = 0;
  double limit_seconds = 0;  // 0 = no limit
  std::string failure;       // first failing case, if any

  bool ok() const { return passed == cases && (limit_seconds == 0 || seconds < limit_seconds); }
};

// One suite per acceptance property, numbered 1..9.
SuiteResult check_chordality(const SelftestOptions& opt);
SuiteResult check_chromatic(const SelftestOptions& opt);
SuiteResult check_regions(const SelftestOptions& opt);
SuiteResult check_functoriality(const SelftestOptions& opt);
SuiteResult check_combing(const SelftestOptions& opt);
SuiteResult check_tower(const SelftestOptions& opt);
SuiteResult check_limit(const SelftestOptions& opt);
SuiteResult check_complete_graphs(const SelftestOptions& opt);
SuiteResult check_trees(const SelftestOptions& opt);

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt);

// "PASS  3 region count ... 100/100 cases 0.12s"
std::string summary_line(const SuiteResult& r);

}  // namespace chordal
