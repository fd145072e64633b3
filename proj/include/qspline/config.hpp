#pragma once

#include <optional>

#include "qspline/error.hpp"

namespace qspline {

// Numerical settings shared by the evaluation routines.
struct EvalConfig {
  double series_tol = 1e-10;
  int quad_points = 32;                  // Simpson nodes per 2*pi frequency period
  std::optional<double> freq_cutoff;     // frequency range [-R, R]; derived from decay when absent
  int lattice_K = 64;                    // integer shifts in periodized sums
  int threads = 1;                       // 0 = hardware concurrency

  void validate() const {
    if (!(series_tol > 0.0)) throw PreconditionError("series_tol must be positive");
    if (quad_points <= 0) throw PreconditionError("quad_points must be positive");
    if (freq_cutoff && !(*freq_cutoff > 0.0)) throw PreconditionError("freq_cutoff must be positive");
    if (lattice_K <= 0) throw PreconditionError("lattice_K must be positive");
    if (threads < 0) throw PreconditionError("threads must be non-negative");
  }
};

}  // namespace qspline
