#pragma once

// Frequency-domain side of quaternionic B-splines: the symbol
// Xi(xi) = (1 - e^{-i xi}) / (i xi), the transform B^_q = Xi^q, the two-scale
// mask and the Riesz/norm estimators built on them.

#include <optional>
#include <vector>

#include "qspline/config.hpp"
#include "qspline/quaternion.hpp"

namespace qspline {

struct XiValue {
  double xi = 0.0;
  Complex value{1.0, 0.0};
  std::optional<Complex> log_value;  // principal log; absent at the zeros xi = 2 pi k, k != 0
};

// Evaluated as e^{-i xi/2} sinc(xi/2), with a Taylor sinc for |xi/2| < 1e-4.
XiValue xi_symbol(double xi);

// True when xi is a nonzero multiple of 2 pi up to rounding.
bool is_lattice_zero(double xi);

// B^_q(xi) = Xi(xi)^q. Exactly 1 at xi = 0 and 0 at xi = 2 pi k, k != 0.
// Requires Sc(q) > 0.
Biquaternion bspline_hat(const SplineOrder& q, double xi);

// |B^_q(xi)|^2 = |Xi(xi)|^{2a} cosh(2 |v| arg Xi(xi)), in closed form.
double bspline_hat_modulus_sq(const Quaternion& q, double xi);

// H0(xi) = 2^{-q} (1 + e^{-i xi})^q. Requires Sc(q) > 1.
Biquaternion mask_h0(const SplineOrder& q, double xi);

struct MaskCoefficients {
  Quaternion order;
  std::vector<Quaternion> h;  // h[k] = 2^{-q} binom(q, k)
  double truncation_error = 0.0;
};

// Coefficients up to the first index where the estimated tail
// sum_{j > K} |h_j| drops below tol. Requires Sc(q) > 1.
MaskCoefficients mask_coefficients(const SplineOrder& q, double tol);

struct RieszBounds {
  double lower = 0.0;
  double upper = 0.0;
  int shifts = 0;             // K, the sum runs over |k| <= K
  double tail_bound = 0.0;    // bound on the omitted |k| > K terms
  std::vector<double> xi;     // grid
  std::vector<double> symbol; // sum_{|k|<=K} |B^_q(xi + 2 pi k)|^2 on the grid
};

// Periodized symbol sum_{|k|<=K} |B^_q(xi + 2 pi k)|^2.
double periodized_symbol(const Quaternion& q, double xi, int K);

// Min and max of the periodized symbol over a uniform grid on [0, 2 pi).
// K <= 0 selects max(64, ceil(1e8^{1/(2a-1)})). Requires Sc(q) > 1/2 and
// throws TruncationError when the tail bound exceeds 1e-6.
RieszBounds riesz_bounds(const SplineOrder& q, int grid_points = 4096, int K = 0, int threads = 1);

struct NormEstimates {
  double l2_sq = 0.0;
  double l2_sq_tail = 0.0;
  double l2_bound = 0.0;  // cosh(pi |v|) ||B^_a||_2^2
  std::optional<double> l1;
  std::optional<double> l1_tail;
  std::optional<double> l1_bound;  // sqrt(cosh(pi |v|)) ||B^_a||_1
  double cutoff = 0.0;
};

// ||B^_q||_2^2 and ||B^_q||_1 by composite Simpson on [-R, R], with
// analytic tail bounds from |B^_q(xi)|^2 <= cosh(2 pi |v|) (2/|xi|)^{2a}.
// L2 requires Sc(q) > 1/2; L1 is computed when Sc(q) > 1.
NormEstimates l2_l1_norm_estimates(const SplineOrder& q, const EvalConfig& config = {});

}  // namespace qspline
