#pragma once

// Independent reference computations by direct numerical integration. They
// are slow and meant for cross-checks.

#include "qspline/quaternion.hpp"

namespace qspline {

struct OracleValue {
  Quaternion value;
  double error = 0.0;  // estimated absolute error
};

// Gamma(q) = int_R exp(s q - e^s) ds, the Euler integral after t = e^s.
// Requires Sc(q) > 0.
OracleValue gamma_by_quadrature(const Quaternion& q);

// B_q(t) = pi^{-1} Re int_0^inf B^_q(xi) e^{i xi t} d xi. Integrates one
// period of 2 pi at a time and extrapolates the partial sums using
// B^_q(xi + 2 pi) = B^_q(xi) (xi / (xi + 2 pi))^q. The error field holds the
// fit residual. Requires Sc(q) > 1.
OracleValue fourier_inversion(const Quaternion& q, double t);

// int_R e^{-q xi^2} e^{i xi t} d xi. Requires Sc(q) > 0.
OracleValue gaussian_ft_by_quadrature(const Quaternion& q, double t);

// int_R e^{-q xi^2} e^{-i alpha q xi} e^{i xi t} d xi. Requires Sc(q) > 0.
OracleValue modulated_gaussian_ft_by_quadrature(const Quaternion& q, double alpha, double t);

}  // namespace qspline
