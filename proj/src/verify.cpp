#include "qspline/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "qspline/error.hpp"
#include "qspline/fourier.hpp"
#include "qspline/gamma.hpp"
#include "qspline/gaussian.hpp"
#include "qspline/oracles.hpp"
#include "qspline/parallel.hpp"
#include "qspline/rotation.hpp"
#include "qspline/time_domain.hpp"

namespace qspline {

namespace {

constexpr double kPi = std::numbers::pi;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Vec3 unit() {
    for (;;) {
      const Vec3 v{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      const double n = norm(v);
      if (n > 0.1 && n <= 1.0) return {v[0] / n, v[1] / n, v[2] / n};
    }
  }
  Vec3 vec(double scale) { return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)}; }
  Quaternion order(double a_lo, double a_hi, double v_max) {
    const Vec3 d = unit();
    const double r = uniform(0.0, v_max);
    return {uniform(a_lo, a_hi), r * d[0], r * d[1], r * d[2]};
  }
  Rotation3 rotation() { return Rotation3::from_axis_angle(unit(), uniform(-kPi, kPi)); }

 private:
  std::mt19937_64 rng_;
};

double rel(const Quaternion& p, const Quaternion& q) { return abs(p - q) / std::max(abs(q), 1e-300); }

double homogeneity_defect(const Quaternion& q, const Quaternion& x) {
  double worst = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) worst = std::max(worst, std::abs(q[j] * x[i] - q[i] * x[j]));
  return worst;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  return out;
}

SplineOrder spline(const Quaternion& q) { return SplineOrder(q, 1.0); }

struct Context {
  std::string suite;
  bool strict;
  int threads;
  std::vector<CheckResult>* out;

  int count(int full) const { return strict ? full : std::max(3, full / 10); }

  void run(const std::string& name, double tol, const std::function<double()>& measure, bool lower = false) const {
    CheckResult r;
    r.suite = suite;
    r.name = name;
    r.tolerance = tol;
    r.lower_bound = lower;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.measured = measure();
      r.passed = lower ? r.measured > tol : r.measured <= tol;
    } catch (const std::exception& e) {
      r.measured = std::nan("");
      r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out->push_back(std::move(r));
  }
};

void algebra_suite(const Context& c) {
  Sampler s(1);
  c.run("vector product = -dot + cross", 1e-12, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(1000); ++i) {
      const Vec3 v = s.vec(3.0), w = s.vec(3.0);
      const Quaternion p = pure(v) * pure(w);
      const Vec3 x = cross(v, w);
      const double d = std::abs(p.a + dot(v, w)) + norm({p.v1 - x[0], p.v2 - x[1], p.v3 - x[2]});
      worst = std::max(worst, d / std::max(1.0, norm(v) * norm(w)));
    }
    return worst;
  });
  c.run("|e^q| = e^{Sc q}", 1e-12, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(1000); ++i) {
      const Quaternion q = s.order(-5.0, 5.0, 10.0);
      worst = std::max(worst, std::abs(abs(quat_exp(q)) / std::exp(q.a) - 1.0));
    }
    return worst;
  });
  c.run("|e^{zq}| / e^{sqrt2 |zq|}", 1.0, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(1000); ++i) {
      const Quaternion q = s.order(-3.0, 3.0, 3.0);
      const Biquaternion p = Biquaternion(q) * std::polar(1.0, s.uniform(-0.499, 0.499) * kPi);
      worst = std::max(worst, abs(quat_exp(p)) / std::exp(std::sqrt(2.0) * abs(p)));
    }
    return worst;
  });
  c.run("derivative law z^q", 1e-6, [&] {
    double worst = 0.0;
    const double h = 1e-5;
    for (int i = 0; i < c.count(200); ++i) {
      const Quaternion q = s.order(-2.0, 3.0, 2.0);
      const Complex z = std::polar(s.uniform(0.5, 2.0), s.uniform(-2.5, 2.5));
      const Biquaternion fd = (complex_pow_quat(z + h, q) - complex_pow_quat(z - h, q)) / (2.0 * h);
      const Biquaternion exact = q * complex_pow_quat(z, q - Quaternion::real(1.0));
      worst = std::max(worst, abs(fd - exact) / abs(exact));
    }
    return worst;
  });
  c.run("semigroup law, parallel vector parts", 1e-10, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(200); ++i) {
      const Quaternion a = s.order(0.0, 2.0, 2.0);
      const Quaternion b = Quaternion::real(s.uniform(0.0, 2.0)) + a.vector() * s.uniform(-2.0, 2.0);
      const Complex z = 1.0 + std::polar(s.uniform(0.0, 0.5), s.uniform(-kPi, kPi));
      worst = std::max(worst, abs(complex_pow_quat(z, a) * complex_pow_quat(z, b) - complex_pow_quat(z, a + b)));
    }
    return worst;
  });
  c.run("semigroup defect, e1 and e2 on |z-1| = 0.1", 1e-6, [&] {
    const Quaternion q1{1, 1, 0, 0}, q2{1, 0, 1, 0};
    double worst = 0.0;
    for (int k = 0; k < 64; ++k) {
      const Complex z = 1.0 + std::polar(0.1, 2 * kPi * k / 64);
      worst = std::max(worst, abs(complex_pow_quat(z, q1) * complex_pow_quat(z, q2) - complex_pow_quat(z, q1 + q2)));
    }
    return worst;
  }, true);
}

void gamma_suite(const Context& c) {
  Sampler s(2);
  c.run("Gamma(q+1) = q Gamma(q)", 1e-10, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(1000); ++i) {
      const Quaternion q = s.order(0.1, 20.0, 5.0);
      worst = std::max(worst, rel(gamma_quat(q + Quaternion::real(1.0)).value, q * gamma_quat(q).value));
    }
    return worst;
  });
  c.run("|Gamma(q)| / (sqrt2 Gamma(Sc q))", 1.0 + 1e-12, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(1000); ++i) {
      const Quaternion q = s.order(0.05, 15.0, 4.0);
      worst = std::max(worst, abs(gamma_quat(q).value) / (std::sqrt(2.0) * std::tgamma(q.a)));
    }
    return worst;
  });
  c.run("rotation covariance of Gamma", 1e-10, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(200); ++i) {
      const Quaternion q = s.order(0.2, 8.0, 3.0);
      const Rotation3 r = s.rotation();
      const Quaternion rhs = rotate_vector_part(r, gamma_quat(q).value);
      worst = std::max(worst, abs(gamma_quat(rotate_vector_part(r, q)).value - rhs) / std::max(1.0, abs(rhs)));
    }
    return worst;
  });
  c.run("homogeneity of Gamma", 1e-12, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(200); ++i) {
      const Quaternion q = s.order(0.2, 8.0, 3.0);
      const Quaternion g = gamma_quat(q).value;
      worst = std::max(worst, homogeneity_defect(q, g) / std::max(1.0, abs(g)));
    }
    return worst;
  });
  c.run("Sc q |(q)_3 / |q|^3 - 1| along a ray", 4.0, [&] {
    const Quaternion dir{1, 0.3, -0.2, 0.1};
    double worst = 0.0;
    for (const double a : {1e2, 1e3, 1e4}) {
      const Quaternion q = dir * a;
      worst = std::max(worst, a * std::abs(abs(pochhammer(q, 3)) / std::pow(abs(q), 3) - 1.0));
    }
    return worst;
  });
  c.run("Pochhammer recursion vs Gamma quotient, j <= 50", 1e-10, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(200); ++i) {
      const Quaternion q = s.order(0.5, 5.0, 2.0);
      for (int j = 0; j <= 50; j += 7) worst = std::max(worst, rel(pochhammer_complex_path(q, j), pochhammer(q, j)));
    }
    return worst;
  });
  c.run("Gamma: complexified vs quadrature vs Gauss limit", 1e-6, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(50); ++i) {
      const Quaternion q = s.order(0.5, 10.0, 3.0);
      const Quaternion g = gamma_quat(q).value;
      const Quaternion quad = gamma_by_quadrature(q).value;
      const Quaternion gauss = gamma_gauss_limit_extrapolated(q, 1000000);
      worst = std::max({worst, rel(quad, g), rel(gauss, g), rel(gauss, quad)});
    }
    return worst;
  });
  c.run("binomial sums 2^q and 0 on |z| = 1", 1e-8, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(50); ++i) {
      const Quaternion q = s.order(0.5, 5.0, 2.0);
      worst = std::max(worst, abs(binomial_series(q, 1.0, 1e-8) - complex_pow_quat(2.0, q)));
      worst = std::max(worst, abs(binomial_series(q, -1.0, 1e-8)));
    }
    return worst;
  });
}

void fourier_suite(const Context& c) {
  Sampler s(3);
  c.run("Xi closed form vs quotient", 1e-13, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(10000); ++i) {
      const double xi = std::pow(10.0, s.uniform(-3.0, 3.0)) * (i % 2 ? 1.0 : -1.0);
      const Complex direct = (1.0 - std::exp(Complex(0.0, -xi))) / Complex(0.0, xi);
      worst = std::max(worst, std::abs(direct - xi_symbol(xi).value));
    }
    return worst;
  });
  c.run("points with Re Xi < 0 and Im Xi = 0", 0.0, [&] {
    double hits = 0.0;
    for (const double xi : linspace(-200.0, 200.0, c.count(400001))) {
      if (is_lattice_zero(xi)) continue;
      const Complex v = xi_symbol(xi).value;
      if (v.real() < 0.0 && v.imag() == 0.0) hits += 1.0;
    }
    return hits;
  });
  c.run("|B^_q(xi)| |xi|^a / (2^a sqrt cosh(2 pi |v|))", 1.0, [&] {
    const Quaternion q{1.7, 0.4, 0.2, -0.3};
    const SplineOrder o(q, 0.0);
    const double bound = std::pow(2.0, q.a) * std::sqrt(std::cosh(2 * kPi * vector_norm(q)));
    double worst = 0.0;
    for (int i = 0; i <= c.count(20000); ++i) {
      const double xi = std::pow(10.0, 1.0 + 3.0 * i / c.count(20000));
      worst = std::max(worst, abs(bspline_hat(o, xi)) * std::pow(xi, q.a) / bound);
    }
    return worst;
  });
  const auto product_defect = [](const Quaternion& q1, const Quaternion& q2) {
    double worst = 0.0;
    for (int i = 0; i < 512; ++i) {
      const double xi = -8 * kPi + 16 * kPi * (i + 0.5) / 512;
      const auto b = [&](const Quaternion& q) { return bspline_hat(SplineOrder(q, 0.0), xi); };
      worst = std::max(worst, abs(b(q1) * b(q2) - b(q1 + q2)));
    }
    return worst;
  };
  c.run("B^_{q1} B^_{q2} = B^_{q1+q2}, parallel", 1e-10,
        [&] { return product_defect({1.5, 0.3, -0.6, 0.9}, {2.2, -0.2, 0.4, -0.6}); });
  c.run("B^ product defect, e1 and e2", 1e-4, [&] { return product_defect({1.5, 1, 0, 0}, {1.5, 0, 1, 0}); },
        true);
  c.run("(-i xi)^q1 and (1 - e^{-i xi})^q2 commute", 1e-12, [&] {
    const Quaternion q1{0.7, 0.2, 0.4, -0.1};
    const Quaternion q2 = Quaternion::real(1.9) + q1.vector() * -2.5;
    double worst = 0.0;
    for (int i = 0; i < c.count(500); ++i) {
      const double xi = s.uniform(-20.0, 20.0);
      const Biquaternion m1 = complex_pow_quat(Complex(0, -xi), q1);
      const Biquaternion m2 = complex_pow_quat(1.0 - std::exp(Complex(0, -xi)), q2);
      worst = std::max(worst, abs(m1 * m2 - m2 * m1) / std::max(1.0, abs(m1) * abs(m2)));
    }
    return worst;
  });
  c.run("B^_q(2 pi k), 1 <= |k| <= 20", 0.0, [&] {
    double worst = 0.0;
    const SplineOrder q({2.3, 0.5, -1, 0.2}, 0.0);
    for (int k = 1; k <= 20; ++k) {
      worst = std::max({worst, abs(bspline_hat(q, 2 * kPi * k)), abs(bspline_hat(q, -2 * kPi * k))});
    }
    return worst;
  });
  c.run("Riesz sandwich violations, 3 orders", 0.0, [&] {
    double violations = 0.0;
    for (const Quaternion& q : {Quaternion{3, 1, -1, 0}, Quaternion{1.5, 0, 0.5, 0}, Quaternion{4, 0.3, 0.3, 0.3}}) {
      const RieszBounds full = riesz_bounds(SplineOrder(q, 0.5), c.count(4096), 0, c.threads);
      const RieszBounds scalar =
          riesz_bounds(SplineOrder(Quaternion::real(q.a), 0.5), c.count(4096), full.shifts, c.threads);
      const double k = std::cosh(kPi * vector_norm(q));
      if (!(full.lower > 0.0)) violations += 1.0;
      for (std::size_t i = 0; i < full.symbol.size(); ++i) {
        const double f = full.symbol[i];
        if (f < scalar.symbol[i] || f < scalar.lower || f > scalar.upper * k) violations += 1.0;
      }
    }
    return violations;
  });
  c.run("|slope - 2| of 1 - |H0|^2 at 0", 0.01, [&] {
    const SplineOrder q({3, 1, 0, 0}, 1.0);
    const auto d = [&](double xi) { return std::abs(1.0 - norm_sq(mask_h0(q, xi))); };
    return std::abs(std::log(d(1e-2) / d(1e-4)) / std::log(1e2) - 2.0);
  });
}

void time_suite(const Context& c) {
  Sampler s(4);
  c.run("integer orders vs cardinal splines", 1e-12, [&] {
    double worst = 0.0;
    for (const int n : {2, 3, 4}) {
      const SplineOrder q(Quaternion::real(n), 1.0);
      for (int i = 0; i < 100; ++i) {
        const double t = -0.5 + (n + 1.0) * i / 99.0;
        // Cox-de Boor: B_n(t) = (t B_{n-1}(t) + (n - t) B_{n-1}(t - 1)) / (n - 1).
        std::function<double(int, double)> cardinal = [&](int m, double x) -> double {
          if (m == 1) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
          return (x * cardinal(m - 1, x) + (m - x) * cardinal(m - 1, x - 1.0)) / (m - 1);
        };
        const Quaternion b = bspline_time(q, t);
        worst = std::max(worst, std::abs(b.a - cardinal(n, t)) + vector_norm(b));
      }
    }
    return worst;
  });
  c.run("homogeneity of B_q", 1e-10, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(100); ++i) {
      const Quaternion q = s.order(1.1, 6.0, 2.0);
      worst = std::max(worst, homogeneity_defect(q, bspline_time(spline(q), s.uniform(0.0, 7.0))));
    }
    return worst;
  });
  c.run("rotation covariance of B_q", 1e-9, [&] {
    const Quaternion q{3.2, 0.4, -0.7, 0.5};
    double worst = 0.0;
    for (int i = 0; i < c.count(20); ++i) {
      const Rotation3 r = s.rotation();
      for (int j = 0; j < 20; ++j) {
        const double t = s.uniform(0.0, 4.5);
        const Quaternion lhs = bspline_time(spline(rotate_vector_part(r, q)), t);
        worst = std::max(worst, abs(lhs - rotate_vector_part(r, bspline_time(spline(q), t))));
      }
    }
    return worst;
  });
  c.run("recursion relation", 1e-8, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(100); ++i)
      worst = std::max(worst, recursion_check(spline(s.order(2.1, 6.0, 1.5)), s.uniform(0.0, 7.0)));
    return worst;
  });
  c.run("refinement residual, mask tol 1e-10", 1e-9, [&] {
    double worst = 0.0;
    for (const Quaternion& v : {Quaternion{3, 1, 0, 0}, Quaternion{2.5, 0, 0.5, 0}, Quaternion{4, 0.3, 0.3, -0.3}}) {
      const MaskCoefficients mask = mask_coefficients(spline(v), 1e-10);
      const BsplineEvaluator eval(spline(v), 17.0);
      for (int i = 0; i <= c.count(400); ++i) {
        const double t = 8.0 * i / c.count(400);
        Quaternion sum{};
        for (std::size_t k = 0; k < mask.h.size(); ++k) sum += 2.0 * mask.h[k] * eval(2.0 * t - k);
        worst = std::max(worst, abs(sum - eval(t)));
      }
    }
    return worst;
  });
  c.run("partition of unity", 1e-6, [&] {
    const BsplineEvaluator eval(spline({3, 1, 0, 0}), 330.0);
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      const double t = 4.0 + i / 20.0;
      Quaternion sum{};
      for (int k = -320; k <= 10; ++k) sum += eval(t - k);
      worst = std::max(worst, abs(sum - Quaternion::real(1.0)));
    }
    return worst;
  });
  c.run("time domain vs Fourier inversion", 1e-5, [&] {
    double worst = 0.0;
    for (const double a : {1.5, 2.5, 3.5}) {
      const Quaternion q = s.order(a, a, 1.0);
      const int n = c.strict ? 6 : 2;
      std::vector<double> err(n);
      std::vector<double> ts(n);
      for (auto& t : ts) t = s.uniform(0.25, 6.0);
      parallel_for(static_cast<std::size_t>(n), c.threads, [&](std::size_t i) {
        err[i] = abs(fourier_inversion(q, ts[i]).value - bspline_time(spline(q), ts[i]));
      });
      worst = std::max(worst, *std::max_element(err.begin(), err.end()));
    }
    return worst;
  });
}

void gaussian_suite(const Context& c) {
  Sampler s(5);
  c.run("sqrt(q)^2 = q", 1e-12, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(1000); ++i) {
      const Quaternion q = s.order(1e-3, 10.0, 10.0);
      const Quaternion r = quat_sqrt(q);
      worst = std::max(worst, abs(r * r - q) / abs(q));
    }
    return worst;
  });
  c.run("Gaussian transforms vs quadrature", 1e-7, [&] {
    double worst = 0.0;
    for (int i = 0; i < c.count(100); ++i) {
      const Quaternion q = s.order(0.05, 5.0, 2.0);
      const double t = s.uniform(-4.0, 4.0);
      const double alpha = s.uniform(-1.0, 1.0) * std::sqrt(q.a) / std::max(vector_norm(q), 0.5);
      const Quaternion g = gaussian_ft_quat(q, t);
      const Quaternion m = modulated_gaussian_ft(q, alpha, t);
      worst = std::max(worst, abs(gaussian_ft_by_quadrature(q, t).value - g) / (1e-5 + abs(g)));
      worst = std::max(worst, abs(modulated_gaussian_ft_by_quadrature(q, alpha, t).value - m) / (1e-5 + abs(m)));
    }
    return worst;
  });
  c.run("sinc envelope, a in {2, 5, 10, 100}", 0.0, [&] {
    const auto grid = linspace(-20.0, 20.0, c.count(100000) + 1);
    double worst = -1.0;
    for (const double a : {2.0, 5.0, 10.0, 100.0}) worst = std::max(worst, sinc_envelope_check(a, grid));
    return worst;
  });
  c.run("|B^_q(xi/sqrt a)| over its Gaussian-plus-tail bound", 0.0, [&] {
    double worst = -1.0;
    for (const double a : {2.0, 10.0, 100.0}) {
      const SplineOrder q({a, 0.6, -0.8, 0.5}, 0.0);
      const double spread = std::sqrt(std::cosh(2.0 * kPi * q.vector_norm()));
      for (const double xi : linspace(-200.0, 200.0, c.count(20001))) {
        const double x = xi / (2.0 * kPi);
        const double rhs = std::exp(-x * x) + (std::abs(x) > 1.0 ? 2.0 / (kPi * kPi * x * x) : 0.0);
        worst = std::max(worst, abs(bspline_hat(q, xi / std::sqrt(a))) - spread * rhs);
      }
    }
    return worst;
  });
  c.run("pointwise ratio log-slope at xi = 1, v = e1", 0.3, [&] {
    const auto dev = [](double a) { return abs(pointwise_gaussian_ratio({1, 0, 0}, a, 1.0) - Biquaternion::real(1.0)); };
    const double d2 = dev(1e2), d3 = dev(1e3), d4 = dev(1e4);
    if (!(d3 < d2 && d4 < d3)) return 1.0;
    return std::abs(std::log10(d4 / d2) / 2.0 + 1.0);
  });
  c.run("pointwise ratio deviation, v = 0, a = 1e4", 1e-3,
        [&] { return abs(pointwise_gaussian_ratio({0, 0, 0}, 1e4, 1.0) - Biquaternion::real(1.0)); });
  c.run("non-monotone Lp sequences, p in {1, 2, inf}", 0.0, [&] {
    double bad = 0.0;
    for (const double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
      if (!lp_convergence_trend({1, -1, 0}, {4, 64, 1024}, p, c.strict ? 40001 : 10001).monotone) bad += 1.0;
    }
    return bad;
  });
  c.run("L1 error at a = 1024, v = e1 - e2", 0.05,
        [&] { return lp_convergence_trend({1, -1, 0}, {1024}, 1.0, c.strict ? 40001 : 10001).norms[0]; });
}

using SuiteFn = void (*)(const Context&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all = {{"algebra", algebra_suite},
                                                                   {"gamma", gamma_suite},
                                                                   {"fourier", fourier_suite},
                                                                   {"time", time_suite},
                                                                   {"gaussian", gaussian_suite}};
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suites()) n.push_back(s.first);
    return n;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, TolProfile profile, int threads) {
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    fn(Context{name, profile == TolProfile::strict, resolve_threads(threads), &out});
  }
  if (!found) throw PreconditionError("unknown suite: " + std::string(suite));
  return out;
}

}  // namespace qspline
