// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wci::acceptance {

struct Options {
  int jobs = 0;  // 0: use hardware concurrency
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full verification battery: the theorem-conformance scan, the
/// counterexample and point families, the exact Hodge and coin-problem
/// instances, and the prime-number checks.
std::vector<CriterionResult> run_all(const Options& options = {});

/// Prints one pass/fail line per criterion plus a summary; returns the
/// number of failed criteria.
int run_and_report(const Options& options, std::ostream& out);

}  // namespace wci::acceptance
