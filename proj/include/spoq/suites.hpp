#pragma once

#include <string>
#include <vector>

#include "spoq/report.hpp"

namespace spoq {

/// The named verification suites, in report order.
std::vector<std::string> suite_names();

/// A suite is available when the dims support it; the representation-level
/// suites need n >= 1 and m >= 1, the formula-path suites only need r >= 1.
bool suite_available(const std::string& suite, int n, int m);

/// Runs one named suite.  Throws BadDims when the suite is unavailable at
/// these dims, and std::invalid_argument for an unknown suite name.
Report run_suite(const std::string& suite, int n, int m, unsigned long seed);

/// Runs every available suite, with check names prefixed "suite/".  Member
/// suites run in parallel when SPO_THREADS allows it.
Report run_all_suites(int n, int m, unsigned long seed);

/// Parallelism cap: SPO_THREADS when set (minimum 1), otherwise 1.
unsigned thread_cap();

} // namespace spoq
