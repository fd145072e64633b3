#include "qspline/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qspline/error.hpp"
#include "qspline/parallel.hpp"

namespace qspline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduces x to (-pi, pi].
double wrap_angle(double x) {
  double y = std::remainder(x, kTwoPi);
  if (y <= -kPi) y += kTwoPi;
  return y;
}

void require_scalar_above(const SplineOrder& q, double floor, const char* what) {
  if (!(q.scalar() > floor)) throw PreconditionError(std::string(what) + " requires Sc(q) > " + std::to_string(floor));
}

// Simpson's rule for f on [0, R] with n (even) panels, accumulated in long
// double.
template <typename F>
double simpson_half_line(F&& f, double R, long n) {
  const double h = R / static_cast<double>(n);
  long double sum = f(0.0) + f(R);
  for (long i = 1; i < n; ++i) sum += ((i % 2 == 1) ? 4.0L : 2.0L) * f(h * static_cast<double>(i));
  return static_cast<double>(sum * h / 3.0L);
}

}  // namespace

bool is_lattice_zero(double xi) {
  if (xi == 0.0 || !std::isfinite(xi)) return false;
  const double k = std::nearbyint(xi / kTwoPi);
  if (k == 0.0) return false;
  return std::abs(xi - kTwoPi * k) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(xi);
}

XiValue xi_symbol(double xi) {
  XiValue out;
  out.xi = xi;
  if (xi == 0.0) {
    out.log_value = Complex(0.0, 0.0);
    return out;
  }
  if (is_lattice_zero(xi)) {
    out.value = 0.0;
    return out;
  }
  const double h = 0.5 * xi;
  double sinc;
  if (std::abs(h) < 1e-4) {
    const double h2 = h * h;
    sinc = 1.0 - h2 / 6.0 + h2 * h2 / 120.0;
  } else {
    sinc = std::sin(h) / h;
  }
  out.value = Complex(std::cos(h), -std::sin(h)) * sinc;
  out.log_value = Complex(std::log(std::abs(sinc)), wrap_angle(-h + (sinc < 0.0 ? kPi : 0.0)));
  return out;
}

Biquaternion bspline_hat(const SplineOrder& q, double xi) {
  require_scalar_above(q, 0.0, "bspline_hat");
  if (xi == 0.0) return Biquaternion::real(1.0);
  const XiValue x = xi_symbol(xi);
  if (!x.log_value) return {};
  return power_from_log(*x.log_value, q.value());
}

double bspline_hat_modulus_sq(const Quaternion& q, double xi) {
  if (!(q.a > 0.0)) throw PreconditionError("bspline_hat_modulus_sq requires Sc(q) > 0");
  const XiValue x = xi_symbol(xi);
  if (!x.log_value) return 0.0;
  return std::exp(2.0 * q.a * x.log_value->real()) * std::cosh(2.0 * vector_norm(q) * x.log_value->imag());
}

Biquaternion mask_h0(const SplineOrder& q, double xi) {
  require_scalar_above(q, 1.0, "mask_h0");
  // 2^{-1} (1 + e^{-i xi}) = cos(xi/2) e^{-i xi/2}; it vanishes at xi = pi mod 2 pi.
  if (is_lattice_zero(xi - kPi) || xi == kPi) return {};
  const double c = std::cos(0.5 * xi);
  if (c == 0.0) return {};
  const Complex log_half = {std::log(std::abs(c)), wrap_angle(-0.5 * xi + (c < 0.0 ? kPi : 0.0))};
  return power_from_log(log_half, q.value());
}

MaskCoefficients mask_coefficients(const SplineOrder& q, double tol) {
  require_scalar_above(q, 1.0, "mask_coefficients");
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  const Quaternion& order = q.value();
  const double a = q.scalar();
  const Quaternion scale = real_part(complex_pow_quat(2.0, -order));

  MaskCoefficients out;
  out.order = order;
  constexpr int kMaxTerms = 100000;
  constexpr int kRun = 5;
  Quaternion b = Quaternion::real(1.0);
  Quaternion poch = Quaternion::real(1.0);
  double factorial = 1.0;
  int run = 0;
  for (int k = 0;; ++k) {
    if (k >= kMaxTerms) throw TruncationError("mask coefficients did not reach tolerance within 1e5 terms");
    const Quaternion hk = scale * b;
    out.h.push_back(hk);
    // sum_{j > k} |h_j| is about |h_k| k / Sc(q) once the decay k^{-a-1} sets in.
    const double tail = abs(hk) * std::max((k + 1.0) / a, 1.0);
    run = (k > a && tail < tol) ? run + 1 : 0;
    if (run >= kRun) {
      out.truncation_error = tail;
      break;
    }
    const Quaternion step = order - Quaternion::real(k);
    if (k < 20) {
      poch = poch * step;
      factorial *= k + 1;
      b = poch / factorial;
    } else {
      b = (b * step) / static_cast<double>(k + 1);
    }
  }
  while (out.h.size() > 1 && out.h.back() == Quaternion{}) out.h.pop_back();
  return out;
}

double periodized_symbol(const Quaternion& q, double xi, int K) {
  if (!(q.a > 0.0)) throw PreconditionError("periodized_symbol requires Sc(q) > 0");
  const double k0 = std::floor(xi / kTwoPi);
  double x0 = xi - kTwoPi * k0;
  if (x0 >= kTwoPi) x0 = 0.0;
  const long lo = static_cast<long>(k0) - K;
  const long hi = static_cast<long>(k0) + K;
  if (x0 == 0.0 || is_lattice_zero(xi) || xi == 0.0) return (lo <= 0 && 0 <= hi) ? 1.0 : 0.0;

  // Xi(x0 + 2 pi j) = e^{-i x0/2} sin(x0/2) / (x0/2 + pi j): the argument is
  // -x0/2 for j >= 0 and pi - x0/2 for j < 0.
  const double a2 = 2.0 * q.a;
  const double r = vector_norm(q);
  const double half = 0.5 * x0;
  const double s = std::pow(std::sin(half), a2);
  double right = 0.0;
  double left = 0.0;
  for (long j = hi; j >= std::max(lo, 0L); --j) right += std::pow(half + kPi * static_cast<double>(j), -a2);
  for (long j = lo; j <= std::min(hi, -1L); ++j) left += std::pow(-(half + kPi * static_cast<double>(j)), -a2);
  return s * (std::cosh(r * x0) * right + std::cosh(2.0 * r * (kPi - half)) * left);
}

RieszBounds riesz_bounds(const SplineOrder& q, int grid_points, int K, int threads) {
  require_scalar_above(q, 0.5, "riesz_bounds");
  if (grid_points < 1) throw PreconditionError("grid_points must be positive");
  const double a = q.scalar();
  constexpr double kMaxShifts = 1e6;
  if (K <= 0) K = static_cast<int>(std::min(kMaxShifts, std::max(64.0, std::ceil(std::pow(1e8, 1.0 / (2.0 * a - 1.0))))));
  // For |j| > K, |x0/2 + pi j| >= pi K, and the cosh factor is at most cosh(2 pi |v|).
  const double tail = std::cosh(2.0 * kPi * q.vector_norm()) * std::pow(kPi, -2.0 * a) *
                      (2.0 * std::pow(K, 1.0 - 2.0 * a) / (2.0 * a - 1.0) + std::pow(K, -2.0 * a));
  if (tail > 1e-6) {
    throw TruncationError("periodized symbol tail bound " + std::to_string(tail) + " exceeds 1e-6 with K = " +
                          std::to_string(K));
  }
  RieszBounds out;
  out.shifts = K;
  out.tail_bound = tail;
  out.xi.resize(grid_points);
  out.symbol.resize(grid_points);
  for (int i = 0; i < grid_points; ++i) out.xi[i] = kTwoPi * i / grid_points;
  parallel_for(static_cast<std::size_t>(grid_points), threads,
               [&](std::size_t i) { out.symbol[i] = periodized_symbol(q.value(), out.xi[i], K); });
  out.lower = *std::min_element(out.symbol.begin(), out.symbol.end());
  out.upper = *std::max_element(out.symbol.begin(), out.symbol.end());
  return out;
}

NormEstimates l2_l1_norm_estimates(const SplineOrder& q, const EvalConfig& config) {
  config.validate();
  require_scalar_above(q, 0.5, "l2_l1_norm_estimates");
  const double a = q.scalar();
  const double r = q.vector_norm();
  const Quaternion& order = q.value();
  const Quaternion scalar_order = Quaternion::real(a);
  // |B^_q(xi)|^2 <= c2 |xi|^{-2a}
  const double c2 = std::cosh(2.0 * kPi * r) * std::pow(2.0, 2.0 * a);
  const auto l2_tail = [&](double R) { return 2.0 * c2 * std::pow(R, 1.0 - 2.0 * a) / (2.0 * a - 1.0); };

  double R;
  if (config.freq_cutoff) {
    R = *config.freq_cutoff;
  } else {
    R = std::pow(2.0 * c2 / (1e-8 * (2.0 * a - 1.0)), 1.0 / (2.0 * a - 1.0));
    R = std::clamp(kTwoPi * std::ceil(R / kTwoPi), 16.0 * kTwoPi, 1e5 * kTwoPi);
  }
  long n = static_cast<long>(std::ceil(R / kTwoPi * config.quad_points));
  n += n % 2;

  NormEstimates out;
  out.cutoff = R;
  const auto msq = [&](double xi) { return bspline_hat_modulus_sq(order, xi); };
  const auto msq_a = [&](double xi) { return bspline_hat_modulus_sq(scalar_order, xi); };
  out.l2_sq = 2.0 * simpson_half_line(msq, R, n);
  out.l2_sq_tail = l2_tail(R);
  out.l2_bound = std::cosh(kPi * r) * 2.0 * simpson_half_line(msq_a, R, n);
  if (a > 1.0) {
    const auto m = [&](double xi) { return std::sqrt(msq(xi)); };
    const auto m_a = [&](double xi) { return std::sqrt(msq_a(xi)); };
    out.l1 = 2.0 * simpson_half_line(m, R, n);
    out.l1_tail = 2.0 * std::sqrt(c2) * std::pow(R, 1.0 - a) / (a - 1.0);
    out.l1_bound = std::sqrt(std::cosh(kPi * r)) * 2.0 * simpson_half_line(m_a, R, n);
  }
  return out;
}

}  // namespace qspline
