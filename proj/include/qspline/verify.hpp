#pragma once

// Property suites for the library invariants, run by `qspline verify`.

#include <string>
#include <string_view>
#include <vector>

namespace qspline {

enum class TolProfile { fast, strict };

struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool lower_bound = false;  // passes when measured > tolerance instead of <=
  bool passed = false;
  double seconds = 0.0;
  std::string error;  // set when the check threw
};

// algebra, gamma, fourier, time, gaussian.
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Throws PreconditionError for an
// unknown name. Sample counts shrink by about 10x under the fast profile.
std::vector<CheckResult> run_suite(std::string_view suite, TolProfile profile, int threads = 1);

}  // namespace qspline
