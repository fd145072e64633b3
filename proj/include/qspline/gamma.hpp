#pragma once

// Quaternionic Gamma, Pochhammer symbols and binomial coefficients.
//
// Every function of a single order q = a + v lives in the commutative
// subalgebra span{1, v/|v|}, which is a copy of C via v/|v| -> i. Most
// routines therefore evaluate the complex function at w = a + i|v| and map
// the result back with along_axis().

#include <cstdint>
#include <vector>

#include "qspline/quaternion.hpp"

namespace qspline {

// Complex Gamma via the Lanczos approximation (g = 7, 9 terms) with the
// reflection formula for Re z < 1/2. Throws PoleError at z = 0, -1, -2, ...
Complex complex_gamma(Complex z);
Complex complex_log_gamma(Complex z);

enum class GammaMethod { complexified, quadrature, gauss_limit };

const char* to_string(GammaMethod m);

struct GammaValue {
  Quaternion value;
  Quaternion order;
  GammaMethod method = GammaMethod::complexified;
};

// Gamma(q) = 1/2 (G(a - i|v|) + G(a + i|v|)) + (v/|v|) (i/2) (G(a - i|v|) - G(a + i|v|)).
// Defined for Sc(q) > 0 and, through the same formula, wherever a + i|v| is
// not a pole. Throws PoleError when |v| = 0 and a is a non-positive integer.
GammaValue gamma_quat(const Quaternion& q);

// Gauss product n! n^q / (q (q+1) ... (q+n)). Requires Sc(q) > 0.
Quaternion gamma_gauss_limit(const Quaternion& q, std::int64_t n);

// One Richardson step on the Gauss product, 2 G_{2n} - G_n, cancelling the
// leading O(1/n) error.
Quaternion gamma_gauss_limit_extrapolated(const Quaternion& q, std::int64_t n);

// Falling factorial (q)_j = q (q-1) ... (q-j+1), left to right.
Quaternion pochhammer(const Quaternion& q, int j);

// The same value through the complex falling factorial of w = a + i|v|.
Quaternion pochhammer_complex_path(const Quaternion& q, int j);

// binom(q, j) = (q)_j / j!. For j > 20 the ratio recursion
// binom(q, j+1) = binom(q, j) (q - j) / (j + 1) is used to avoid overflow.
Quaternion binom_quat(const Quaternion& q, int j);

// Falling factorials and binomials of a fixed order for j = 0..max_j.
class PochhammerTable {
 public:
  PochhammerTable(const Quaternion& q, int max_j);

  const Quaternion& order() const { return q_; }
  int max_index() const { return static_cast<int>(poch_.size()) - 1; }
  const Quaternion& pochhammer(int j) const { return poch_.at(j); }
  const Quaternion& binomial(int j) const { return binom_.at(j); }

 private:
  Quaternion q_;
  std::vector<Quaternion> poch_;
  std::vector<Quaternion> binom_;
};

struct SeriesReport {
  std::int64_t terms = 0;
  bool slow_convergence = false;  // |z| = 1 and Sc(q) <= 1
  bool extrapolated = false;      // boundary sum obtained from the tail model
  double fit_residual = 0.0;
};

// (1 + z)^q = sum_j binom(q, j) z^j for |z| <= 1, Sc(q) > 0.
//
// Inside the disk the sum stops once 5 consecutive terms are below
// tol * max(|S|, 1) (at most 1e5 terms, TruncationError beyond). On the unit
// circle the tail decays only algebraically, so the partial sums are fitted
// against their asymptotic form and the limit is extrapolated.
Biquaternion binomial_series(const Quaternion& q, Complex z, double tol, SeriesReport* report = nullptr);

}  // namespace qspline
