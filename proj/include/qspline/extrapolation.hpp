#pragma once

// Limit extrapolation for slowly convergent sequences whose tail has a known
// algebraic form. A partial sum S_N is modelled as
//
//   S_N = S + sum_c ratio_c^N N^{-exponent_c} sum_{m<orders} N^{-m}
//             [alpha_{c,m} cos(f ln N) + beta_{c,m} sin(f ln N)]
//
// with biquaternion coefficients, and S is recovered by least squares.
// Quaternionic powers N^{-q} = N^{-a}[cos(|v| ln N) - v/|v| sin(|v| ln N)]
// produce exactly this shape with f = |v|.

#include <span>
#include <vector>

#include "qspline/quaternion.hpp"

namespace qspline {

struct TailComponent {
  Complex ratio{1.0, 0.0};  // |ratio| = 1 for oscillating tails
  double exponent = 1.0;
};

struct TailModel {
  std::vector<TailComponent> components;
  double log_frequency = 0.0;
  int orders = 4;
};

struct ExtrapolationResult {
  Biquaternion limit;
  double fit_residual = 0.0;  // max |residual| over the sample nodes
};

ExtrapolationResult extrapolate_limit(std::span<const double> nodes,
                                      std::span<const Biquaternion> partial_sums, const TailModel& model);

}  // namespace qspline
