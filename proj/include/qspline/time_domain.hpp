#pragma once

// Time-domain evaluation of quaternionic B-splines
//
//   B_q(t) = Gamma(q)^{-1} sum_{0 <= k < t} (-1)^k binom(q, k) (t - k)^{q-1},
//
// which has only finitely many nonzero terms for each t.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qspline/gamma.hpp"
#include "qspline/quaternion.hpp"

namespace qspline {

template <typename T>
struct BasicSampledField {
  double t0 = 0.0;
  double dt = 1.0;
  std::vector<BasicQuaternion<T>> samples;
  Quaternion order;
  std::string method;

  std::size_t size() const { return samples.size(); }
  double abscissa(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
};

using SampledField = BasicSampledField<double>;
using SpectrumField = BasicSampledField<Complex>;

// t_+^q: 0 for t <= 0, t^q = t^a [cos(|v| ln t) + (v/|v|) sin(|v| ln t)] otherwise.
Quaternion truncated_power(double t, const Quaternion& q);

struct EvalReport {
  int terms = 0;               // nonzero terms in the alternating sum
  double amplification = 0.0; // max |term| / |sum|
  bool ill_conditioned = false;  // amplification above 1e12
};

// Evaluates B_q for one order, sharing binomials and Gamma(q)^{-1} between
// calls. Immutable after construction.
class BsplineEvaluator {
 public:
  // Valid for t < max_t; requires Sc(q) > 1.
  BsplineEvaluator(const SplineOrder& q, double max_t);

  Quaternion operator()(double t, EvalReport* report = nullptr) const;

  const Quaternion& order() const { return q_; }
  const Quaternion& gamma_inverse() const { return gamma_inv_; }

 private:
  Quaternion q_;
  Quaternion q_minus_one_;
  Quaternion gamma_inv_;
  PochhammerTable table_;
};

Quaternion bspline_time(const SplineOrder& q, double t, EvalReport* report = nullptr);

// B_q at t0 + i dt, i < n. Nodes may be evaluated concurrently; each node is
// computed exactly as bspline_time would, so the output does not depend on
// the thread count.
SampledField bspline_time_grid(const SplineOrder& q, double t0, double dt, int n, int threads = 1);

// Number of binomial coefficients needed so that the neglected tail
// sum_{k > K} |binom(q, k)| is below tol. Throws TruncationError when this
// takes more than 1e5 terms.
int binomial_truncation(const Quaternion& q, double tol);

// (nabla^q f)(t) = sum_k (-1)^k binom(q, k) f(t - k) on the grid of f. The
// step must divide 1; samples before the first grid point are taken as 0.
SampledField backwards_difference(const Quaternion& q, const SampledField& f, double tol);

// Same for a callable f on the grid t0 + i dt. With support_start set, f is
// assumed to vanish for t < support_start and the sum is finite; otherwise
// it is truncated by binomial_truncation(q, tol).
SampledField backwards_difference(const Quaternion& q, const std::function<Quaternion(double)>& f, double t0,
                                  double dt, int n, double tol,
                                  std::optional<double> support_start = std::nullopt);

// |(q - 1) B_q(t) - t B_{q-1}(t) - (q - t) B_{q-1}(t - 1)|. Requires Sc(q) > 2.
double recursion_check(const SplineOrder& q, double t);

}  // namespace qspline
