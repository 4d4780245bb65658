// Acceptance gate: one line per criterion, run against the reproduce suite
// with each criterion's time budget as the hard timeout.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "signlab/cli/reproduce.hpp"

namespace {

struct Criterion {
  int number;
  double budget_secs;
  bool per_check;  // budget applies to each check rather than the total
  const char* title;
};

const std::vector<Criterion> kCriteria = {
    {1, 1, true, "sign degree of AND_k and OR_k is 1, k = 2..4"},
    {2, 5, false, "size-4 parity formula has sign degree 2; XOR_k has sign degree k, k <= 4"},
    {3, 60, false, "OR_2 of two AND_4 blocks: infeasible at 1, feasible at 2, both certified"},
    {4, 120, false, "composition bound and composed witness on all 256 pairs of 2-variable functions"},
    {5, 30, false, "alpha = 2: composed witness gives deg_2(XOR_4) >= 4 and the LP gives 4"},
    {6, 60, false, "deg(f o f^2) >= deg(f)^2 for all 16 two-variable f"},
    {7, 600, false, "every formula of size s <= 6 over <= 6 variables has sign degree <= floor(sqrt(s))"},
    {8, 30, false, "star certificates give sqrt(k), k <= 8; spectral norms match closed forms"},
    {9, 600, false, "500 random functions, n <= 3: certificates re-verify, brute force agrees"},
};

}  // namespace

int main() {
  bool all = true;
  for (const auto& c : kCriteria) {
    signlab::cli::SuiteOptions options;
    options.criterion = c.number;
    options.timeout_secs = static_cast<int>(std::ceil(c.budget_secs));
    const auto results = signlab::cli::run_suite(options);

    bool pass = !results.empty();
    double total = 0, slowest = 0;
    std::string detail;
    for (const auto& r : results) {
      total += r.seconds;
      slowest = std::max(slowest, r.seconds);
      if (!r.pass) {
        pass = false;
        detail += " [" + r.id + ": " + r.computed + (r.note.empty() ? "" : ", " + r.note) + "]";
      }
    }
    const double measured = c.per_check ? slowest : total;
    if (measured >= c.budget_secs) {
      pass = false;
      detail += " [over budget]";
    }
    std::printf("criterion %d %s  %7.2f s / %g s%s  %s%s\n", c.number, pass ? "PASS" : "FAIL", measured,
                c.budget_secs, c.per_check ? " each" : "", c.title, detail.c_str());
    std::fflush(stdout);
    all = all && pass;
  }
  return all ? 0 : 1;
}
