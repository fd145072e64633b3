#pragma once

// Gaussian limits of quaternionic B-splines: quaternionic Gaussian Fourier
// integrals, the sinc envelope and convergence diagnostics for
// B^_q(xi / sqrt(a)) as a = Sc(q) grows.

#include <vector>

#include "qspline/quaternion.hpp"

namespace qspline {

// Principal square root (q + |q|) / (sqrt(2) sqrt(a + |q|)). Throws
// DomainError for negative reals.
Quaternion quat_sqrt(const Quaternion& q);

// int e^{-q xi^2} e^{i xi t} d xi = sqrt(pi) (sqrt q)^{-1} e^{-t^2 / (4q)}, Sc(q) > 0.
Quaternion gaussian_ft_quat(const Quaternion& q, double t);

// int e^{-q xi^2} e^{-i alpha q xi} e^{i xi t} d xi
//   = sqrt(pi) (sqrt q)^{-1} e^{-q alpha^2 / 4} e^{alpha t / 2} e^{-t^2 / (4q)}, Sc(q) > 0.
Quaternion modulated_gaussian_ft(const Quaternion& q, double alpha, double t);

// A_q(xi) = e^{-i sqrt(a) xi/2} e^{-xi^2/24} e^{-i xi v/(2 sqrt a)} e^{-xi^2 v/(24 a)},
// the Gaussian approximant of B^_q(xi / sqrt(a)) for q = a + v.
class GaussianApproximant {
 public:
  GaussianApproximant(const Vec3& v, double a);

  const Quaternion& order() const { return q_; }
  double a() const { return q_.a; }

  Biquaternion approx_hat(double xi) const;
  // Exponent E with approx_hat(xi) = exp(E).
  Biquaternion exponent(double xi) const;
  // e^{3|v|^2} e^{-(|xi|/sqrt 24 - sqrt 3 |v|)^2}, independent of a.
  double envelope(double xi) const;

 private:
  Quaternion q_;
};

// |sinc(pi xi / sqrt a)|^a - [e^{-xi^2} + (1 - chi_[-1,1](xi)) 2 / (pi xi)^2],
// maximized over the grid. Requires a >= 2.
double sinc_envelope_check(double a, const std::vector<double>& xi_grid);

// B^_q(xi / sqrt a) A_q(xi)^{-1} for q = a + v. Requires a >= 2.
Biquaternion pointwise_gaussian_ratio(const Vec3& v, double a, double xi);

struct LpTrend {
  std::vector<double> a;
  std::vector<double> norms;        // ||B^_q(. / sqrt a) - A_q||_p on [-R, R]
  std::vector<double> tail_bounds;  // bound on the contribution from |xi| > R
  double range = 0.0;               // R = 6 sqrt(24) (1 + |v|)
  bool monotone = true;             // strictly decreasing in a
};

// L^p error of the Gaussian approximant for each a (p = infinity allowed).
LpTrend lp_convergence_trend(const Vec3& v, const std::vector<double>& a_list, double p, int points = 40001);

}  // namespace qspline
