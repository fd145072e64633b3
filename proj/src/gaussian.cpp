#include "qspline/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qspline/error.hpp"
#include "qspline/fourier.hpp"

namespace qspline {

namespace {

constexpr double kPi = std::numbers::pi;

void require_gaussian_regime(double a) {
  if (!(a >= 2.0)) throw PreconditionError("Gaussian approximation requires Sc(q) >= 2");
}

// -i xi sqrt(a)/2 - xi^2/24 and -i xi/(2 sqrt a) - xi^2/(24 a).
Complex scalar_exponent(double a, double xi) { return {-xi * xi / 24.0, -0.5 * xi * std::sqrt(a)}; }
Complex vector_exponent(double a, double xi) { return {-xi * xi / (24.0 * a), -0.5 * xi / std::sqrt(a)}; }

Biquaternion combine(const Complex& s, const Complex& w, const Vec3& v) {
  return {s, w * v[0], w * v[1], w * v[2]};
}

}  // namespace

Quaternion quat_sqrt(const Quaternion& q) {
  const double m = abs(q);
  if (m == 0.0) return {};
  const double r2 = q.v1 * q.v1 + q.v2 * q.v2 + q.v3 * q.v3;
  if (r2 == 0.0 && q.a < 0.0) throw DomainError("square root of a negative real is not unique");
  // a + |q| loses precision for a < 0; use |v|^2 / (|q| - a) there.
  const double s = q.a >= 0.0 ? q.a + m : r2 / (m - q.a);
  const double scale = 1.0 / (std::numbers::sqrt2 * std::sqrt(s));
  return {s * scale, q.v1 * scale, q.v2 * scale, q.v3 * scale};
}

Quaternion gaussian_ft_quat(const Quaternion& q, double t) {
  if (!(q.a > 0.0)) throw PreconditionError("Gaussian Fourier transform requires Sc(q) > 0");
  const Quaternion e = quat_exp(inverse(q) * (-0.25 * t * t));
  return inverse(quat_sqrt(q)) * e * std::sqrt(kPi);
}

Quaternion modulated_gaussian_ft(const Quaternion& q, double alpha, double t) {
  if (!(q.a > 0.0)) throw PreconditionError("Gaussian Fourier transform requires Sc(q) > 0");
  const Quaternion e = quat_exp(q * (-0.25 * alpha * alpha) - inverse(q) * (0.25 * t * t));
  return inverse(quat_sqrt(q)) * e * (std::sqrt(kPi) * std::exp(0.5 * alpha * t));
}

GaussianApproximant::GaussianApproximant(const Vec3& v, double a) : q_(a, v[0], v[1], v[2]) {
  if (!(a > 0.0)) throw PreconditionError("Gaussian approximant requires Sc(q) > 0");
}

Biquaternion GaussianApproximant::exponent(double xi) const {
  return combine(scalar_exponent(q_.a, xi), vector_exponent(q_.a, xi), vector_part(q_));
}

Biquaternion GaussianApproximant::approx_hat(double xi) const { return quat_exp(exponent(xi)); }

double GaussianApproximant::envelope(double xi) const {
  const double r = vector_norm(q_);
  const double d = std::abs(xi) / std::sqrt(24.0) - std::sqrt(3.0) * r;
  return std::exp(3.0 * r * r - d * d);
}

double sinc_envelope_check(double a, const std::vector<double>& xi_grid) {
  require_gaussian_regime(a);
  double worst = -std::numeric_limits<double>::infinity();
  for (const double xi : xi_grid) {
    const double x = kPi * xi / std::sqrt(a);
    const double sinc = x == 0.0 ? 1.0 : std::sin(x) / x;
    double bound = std::exp(-xi * xi);
    if (std::abs(xi) > 1.0) bound += 2.0 / (kPi * kPi * xi * xi);
    worst = std::max(worst, std::pow(std::abs(sinc), a) - bound);
  }
  return worst;
}

Biquaternion pointwise_gaussian_ratio(const Vec3& v, double a, double xi) {
  require_gaussian_regime(a);
  const XiValue x = xi_symbol(xi / std::sqrt(a));
  if (!x.log_value) return {};
  // Everything lies in span{1, v}, so B^ A^{-1} = exp(q log Xi - E).
  const Complex L = *x.log_value;
  return quat_exp(combine(a * L - scalar_exponent(a, xi), L - vector_exponent(a, xi), v));
}

LpTrend lp_convergence_trend(const Vec3& v, const std::vector<double>& a_list, double p, int points) {
  if (!(p >= 1.0)) throw PreconditionError("p must be at least 1");
  if (points < 3) throw PreconditionError("need at least 3 quadrature points");
  if (points % 2 == 0) ++points;
  const bool sup = std::isinf(p);
  const double r = norm(v);

  LpTrend out;
  out.range = 6.0 * std::sqrt(24.0) * (1.0 + r);
  const double R = out.range;
  const double h = 2.0 * R / (points - 1);
  const double spread = std::sqrt(std::cosh(2.0 * kPi * r));

  for (const double a : a_list) {
    require_gaussian_regime(a);
    const SplineOrder q(Quaternion(a, v[0], v[1], v[2]), 0.0);
    const GaussianApproximant approx(v, a);
    const auto err = [&](double xi) { return abs(bspline_hat(q, xi / std::sqrt(a)) - approx.approx_hat(xi)); };

    double norm_value = 0.0;
    if (sup) {
      for (int i = 0; i < points; ++i) norm_value = std::max(norm_value, err(-R + h * i));
    } else {
      long double sum = 0.0L;
      for (int i = 0; i < points; ++i) {
        const double w = (i == 0 || i == points - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * std::pow(err(-R + h * i), p);
      }
      norm_value = std::pow(static_cast<double>(sum * h / 3.0L), 1.0 / p);
    }

    // Pointwise bound beyond R: |B^| <= sqrt(cosh(2 pi |v|)) |sinc|^a, and
    // |sinc(xi/(2 sqrt a))|^a <= min(e^{-(xi/2pi)^2} + 8/xi^2, (2 sqrt(a)/xi)^a).
    const auto bound = [&](double xi) {
      const double lemma = std::exp(-std::pow(xi / (2.0 * kPi), 2)) + 8.0 / (xi * xi);
      const double algebraic = std::pow(2.0 * std::sqrt(a) / xi, a);
      return spread * std::min(lemma, algebraic) + approx.envelope(xi);
    };
    double tail;
    if (sup) {
      tail = bound(R);
      for (double xi = R; xi < 100.0 * R; xi += h) tail = std::max(tail, bound(xi));
    } else {
      const int n = 20000;
      const double far = 100.0 * R;
      const double hh = (far - R) / n;
      long double s = 0.0L;
      for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        s += w * std::pow(bound(R + hh * i), p);
      }
      double integral = 2.0 * static_cast<double>(s * hh / 3.0L);
      integral += 2.0 * std::pow(8.0 * spread, p) * std::pow(far, 1.0 - 2.0 * p) / (2.0 * p - 1.0);
      tail = std::pow(integral, 1.0 / p);
    }

    if (!out.norms.empty() && !(norm_value < out.norms.back())) out.monotone = false;
    out.a.push_back(a);
    out.norms.push_back(norm_value);
    out.tail_bounds.push_back(tail);
  }
  return out;
}

}  // namespace qspline
