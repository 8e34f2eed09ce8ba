#pragma once

#include <string>
#include <vector>

// Named verification suites mirroring the structural theorems; the CLI
// `verify` subcommand and the acceptance tests run these.

namespace cocyc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Suites: translate (matrix vs diagram route for the six generator
// families), transpose (complement = transposition), orders (group orders
// and closure), eq9 (coboundary class products against K), crossconstruct
// (block generators vs negated deltas), all.
// Exhaustive at t = 3; random sampling with a fixed seed at larger t.
std::vector<CheckResult> run_suite(const std::string& suite, int t);

std::vector<std::string> suite_names();

}  // namespace cocyc
