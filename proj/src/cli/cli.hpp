#pragma once

// The qspline command-line tool. Exit codes: 0 success, 1 failed check or
// computation, 2 invalid arguments or orders (including poles), 3 I/O errors.

#include <ostream>
#include <stdexcept>
#include <string>

namespace qspline::cli {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Grid {
  double start = 0.0;
  double step = 1.0;
  int count = 1;

  double at(int i) const { return start + step * i; }
};

// "start:step:count" with step > 0 and count >= 1.
Grid parse_grid(const std::string& text);

// Worker threads from QSPLINE_THREADS (0 or unset = hardware concurrency).
int threads_from_env();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qspline::cli
