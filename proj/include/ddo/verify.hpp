#pragma once

// Check suites shared by the `verify` command and the acceptance binary.
// Each check compares an observed error against a tolerance; boolean
// properties report their violation count against tolerance 0.

#include <optional>
#include <string>
#include <vector>

#include "ddo/model.hpp"

namespace ddo::verify {

struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  double observed = 0.0;
  bool passed = false;
  std::string detail;
  bool timing = false;  // runtime budget; not affected by tolerance overrides
};

struct Options {
  std::optional<double> tolerance;  // replaces every non-timing tolerance
  int basis_size = 0;               // 0: per-check default
  std::optional<int> epsilon;       // restrict 2D sector checks
  int max_level = 6;                // levels per 1D oracle comparison
  unsigned seed = 0;                // residual sample offset
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool passed() const;
};

inline constexpr int kCriterionCount = 10;

// Acceptance criteria 1..10 with their stated tolerances and runtime budgets.
Criterion run_criterion(int id, const Options& options = {});

// Named suites for one model at the given parameters: "oracle", "residual",
// "gram", "limits", "implicit", "angular", or "all". Unknown names throw
// std::invalid_argument.
std::vector<CheckResult> run_suite(const std::string& suite, ModelKind kind, const ModelParams& params,
                                   const Options& options = {});

// Suite names accepted by run_suite (without "all").
const std::vector<std::string>& suite_names();

}  // namespace ddo::verify
