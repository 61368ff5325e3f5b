#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drury/linalg.hpp"

namespace drury {

struct SuiteResult {
  std::string name;
  int instances = 0;
  int passed = 0;
  int failed = 0;
  int violations = 0;    // THEOREM_VIOLATION verdicts
  int inapplicable = 0;  // hypotheses not met, no claim made
  double seconds = 0;
  std::vector<std::string> failures;  // first few diagnostics
};

/// rigidity-cyclic, rigidity-coinvariant, rigidity-adjoint, splitting,
/// greedy, decomposition, witness.
const std::vector<std::string>& suite_names();

int default_instances(const std::string& suite);

/// count < 0 selects the default instance count.
SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                      int count = -1, const Tolerance& tol = {});

/// `all` runs every suite.
std::vector<SuiteResult> run_sweep(const std::string& name, std::uint64_t seed,
                                   int count = -1, const Tolerance& tol = {});

}  // namespace drury
