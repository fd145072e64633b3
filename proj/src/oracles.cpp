#include "qspline/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qspline/error.hpp"
#include "qspline/extrapolation.hpp"
#include "qspline/fourier.hpp"
#include "qspline/quadrature.hpp"

namespace qspline {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_scalar(const Quaternion& q, double floor) {
  if (!(q.a > floor)) throw PreconditionError("oracle requires Sc(q) > " + std::to_string(floor));
}

}  // namespace

OracleValue gamma_by_quadrature(const Quaternion& q) {
  require_positive_scalar(q, 0.0);
  // e^{s a} < 1e-20 below lo; e^{s a - e^s} is negligible above hi.
  const double lo = -46.0 / q.a;
  const double hi = std::log(2.0 * q.a + 80.0) + 1.0;
  const auto f = [&](double s) { return quat_exp(q * s - Quaternion::real(std::exp(s))); };
  const auto r = integrate_gk<Quaternion>(f, lo, hi, 1e-15, 1e-14, 20000);
  return {r.value, r.error};
}

OracleValue fourier_inversion(const Quaternion& q, double t) {
  require_positive_scalar(q, 1.0);
  const SplineOrder order(q, 1.0);
  const Complex omega(0.0, t);
  const auto f = [&](double xi) { return bspline_hat(order, xi) * std::exp(omega * xi); };

  std::vector<double> nodes;
  for (int j = 0;; ++j) {
    const double k = std::round(64.0 * std::pow(2.0, j / 4.0));
    if (k > 1024.0) break;
    nodes.push_back(k);
  }
  std::vector<Biquaternion> sums;
  Biquaternion running{};
  double quad_error = 0.0;
  int done = 0;
  for (const double k : nodes) {
    for (; done < static_cast<int>(k); ++done) {
      const auto r = integrate_gk<Biquaternion>(f, 2.0 * kPi * done, 2.0 * kPi * (done + 1), 1e-13, 0.0, 200);
      running += r.value;
      quad_error += r.error;
    }
    sums.push_back(running);
  }

  const double theta = 2.0 * kPi * t;
  const Complex ratio = std::polar(1.0, theta);
  const bool resonant = std::abs(std::remainder(t, 1.0)) < 1e-12;
  TailModel model;
  model.components.push_back({resonant ? Complex(1.0) : ratio, resonant ? q.a - 1.0 : q.a});
  model.log_frequency = vector_norm(q);
  model.orders = 6;
  const ExtrapolationResult ex = extrapolate_limit(nodes, sums, model);
  return {real_part(ex.limit) / kPi, (ex.fit_residual + quad_error) / kPi};
}

OracleValue gaussian_ft_by_quadrature(const Quaternion& q, double t) {
  require_positive_scalar(q, 0.0);
  const double L = std::max(10.0, 8.0 / std::sqrt(q.a));
  const auto f = [&](double xi) { return quat_exp(q * (-xi * xi)) * std::cos(xi * t); };
  const auto r = integrate_gk<Quaternion>(f, -L, L, 1e-15, 1e-13, 20000);
  return {r.value, r.error};
}

OracleValue modulated_gaussian_ft_by_quadrature(const Quaternion& q, double alpha, double t) {
  require_positive_scalar(q, 0.0);
  const double r = vector_norm(q);
  // The modulation grows like e^{|alpha| |v| |xi|}, shifting the mass by this much.
  const double shift = std::abs(alpha) * r / (2.0 * q.a);
  const double L = shift + std::max(10.0, 8.0 / std::sqrt(q.a));
  const auto f = [&](double xi) {
    const Biquaternion m = quat_exp(Biquaternion(q) * Complex(0.0, -alpha * xi));
    return (quat_exp(q * (-xi * xi)) * m) * std::exp(Complex(0.0, xi * t));
  };
  const auto res = integrate_gk<Biquaternion>(f, -L, L, 1e-15, 1e-13, 20000);
  return {real_part(res.value), res.error + abs(imag_part(res.value))};
}

}  // namespace qspline
