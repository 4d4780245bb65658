#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stop_token>
#include <string>
#include <vector>

namespace signlab::cli {

struct CheckContext {
  std::uint64_t seed = 0;
  bool corrupt_witness = false;
  std::stop_token stop;
};

struct CheckOutcome {
  bool pass = false;
  std::string computed;
  std::string expected;
  std::string note;  // free text, human report only
};

/// Provenance of an expected value.
enum class Source { kStated, kComputed, kElementary };

struct Check {
  std::string id;
  std::string group;
  int criterion = 0;  // acceptance criterion, 0 for supporting checks
  std::string anchor;
  Source source = Source::kStated;
  std::function<CheckOutcome(const CheckContext&)> run;
};

struct CheckResult {
  std::string id;
  std::string group;
  int criterion = 0;
  std::string anchor;
  bool pass = false;
  bool timed_out = false;
  std::string computed;
  std::string expected;  // value plus provenance
  std::string note;
  double seconds = 0;
};

/// Canonical order; every id is unique.
const std::vector<Check>& reproduce_checks();

struct SuiteOptions {
  std::uint64_t seed = 0;
  int timeout_secs = 300;
  std::optional<std::string> only;  // group filter
  std::optional<int> criterion;     // criterion filter
  bool corrupt_witness = false;
};

std::vector<CheckResult> run_suite(const SuiteOptions& options, std::ostream* progress = nullptr);

/// One line per check: `<id> <status> <computed> <expected> <anchor>`.
/// Contains no timings, so identical runs give identical bytes.
std::string format_machine_report(const std::vector<CheckResult>& results);
std::string format_human_report(const std::vector<CheckResult>& results);

std::vector<std::string> reproduce_groups();

}  // namespace signlab::cli
