// Runs the ten acceptance criteria and prints one line per criterion.
#include <cstdio>
#include <string>

#include "ddo/verify.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0;
  for (int id = 1; id <= ddo::verify::kCriterionCount; ++id) {
    const auto c = ddo::verify::run_criterion(id);
    if (!c.passed()) ++failed;
    std::printf("criterion %2d %s: %s (%zu checks, %.2f s)\n", id, c.passed() ? "PASS" : "FAIL", c.title.c_str(),
                c.checks.size(), c.seconds);
    for (const auto& k : c.checks) {
      if (!verbose && k.passed) continue;
      std::printf("    %s %s observed=%.3g tolerance=%.3g %s\n", k.passed ? "ok  " : "FAIL", k.name.c_str(), k.observed,
                  k.tolerance, k.detail.c_str());
    }
  }
  std::printf("%d of %d criteria passed\n", ddo::verify::kCriterionCount - failed, ddo::verify::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
