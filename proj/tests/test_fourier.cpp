#include <doctest.h>

#include <cmath>

#include "qspline/error.hpp"
#include "qspline/fourier.hpp"
#include "qspline/gamma.hpp"
#include "support.hpp"

using namespace qspline;
using qspline::testing::Gen;
using qspline::testing::kPi;

namespace {

SplineOrder order(const Quaternion& q, double floor = 0.0) { return SplineOrder(q, floor); }

Complex xi_direct(double xi) { return (1.0 - std::exp(Complex(0, -xi))) / Complex(0, xi); }

double log_slope(double x1, double y1, double x2, double y2) {
  return (std::log(y2) - std::log(y1)) / (std::log(x2) - std::log(x1));
}

}  // namespace

TEST_CASE("Xi special values") {
  const XiValue zero = xi_symbol(0.0);
  CHECK(zero.value == Complex(1.0, 0.0));
  REQUIRE(zero.log_value.has_value());
  CHECK(*zero.log_value == Complex(0.0, 0.0));

  const XiValue lattice = xi_symbol(2 * kPi);
  CHECK(lattice.value == Complex(0.0, 0.0));
  CHECK_FALSE(lattice.log_value.has_value());
  for (int k = -20; k <= 20; ++k) {
    if (k == 0) continue;
    CHECK(xi_symbol(2 * kPi * k).value == Complex(0.0, 0.0));
    CHECK(is_lattice_zero(2 * kPi * k));
  }
  CHECK_FALSE(is_lattice_zero(2 * kPi + 1e-9));

  const XiValue half = xi_symbol(kPi);
  CHECK(std::abs(half.value - Complex(0.0, -2.0 / kPi)) < 1e-15);
}

TEST_CASE("Xi closed form equals the defining quotient") {
  Gen gen(201);
  for (int n = 0; n < 2000; ++n) {
    const double mag = std::pow(10.0, gen.uniform(-3, 3));
    const double xi = gen.uniform(0, 1) < 0.5 ? -mag : mag;
    CHECK(std::abs(xi_symbol(xi).value - xi_direct(xi)) < 1e-13);
  }
  // Near the removable singularity the Taylor branch keeps full accuracy.
  for (double xi : {1e-12, -3e-9, 1.9e-4, 2.1e-4}) {
    const double h = xi / 2;
    const Complex exact = Complex(std::cos(h), -std::sin(h)) * (1 - h * h / 6);
    CHECK(std::abs(xi_symbol(xi).value - exact) < 1e-15);
  }
}

TEST_CASE("Xi log is the principal log of the value") {
  Gen gen(202);
  for (int n = 0; n < 2000; ++n) {
    const double xi = gen.uniform(-60, 60);
    const XiValue x = xi_symbol(xi);
    REQUIRE(x.log_value.has_value());
    CHECK(std::abs(std::exp(*x.log_value) - x.value) < 1e-14);
    CHECK(x.log_value->imag() > -kPi);
    CHECK(x.log_value->imag() <= kPi);
    CHECK(std::abs(x.log_value->imag() - std::arg(x.value)) < 1e-9);
  }
}

TEST_CASE("Xi avoids the negative real axis away from its zeros") {
  for (int i = 1; i < 200000; ++i) {
    const double xi = -100.0 + 200.0 * i / 200000.0;
    const Complex v = xi_symbol(xi).value;
    if (v.real() < 0.0) CHECK(std::abs(v.imag()) > 0.0);
  }
  // Im Xi(xi) = -(1 - cos xi)/xi.
  for (double xi : {0.5, 1.0, 3.0, -2.0, 7.5}) {
    CHECK(xi_symbol(xi).value.imag() == doctest::Approx(-(1 - std::cos(xi)) / xi).epsilon(1e-13));
  }
}

TEST_CASE("B-hat special values") {
  const SplineOrder q = order({2.5, 1, -0.5, 0.3});
  CHECK(bspline_hat(q, 0.0) == Biquaternion::real(1.0));
  for (int k = 1; k <= 20; ++k) {
    CHECK(bspline_hat(q, 2 * kPi * k) == Biquaternion{});
    CHECK(bspline_hat(q, -2 * kPi * k) == Biquaternion{});
  }
  const Biquaternion two = bspline_hat(order(Quaternion::real(2)), kPi);
  CHECK(std::abs(two.a - Complex(-4 / (kPi * kPi), 0)) < 1e-15);
  CHECK(abs(two.vector()) == 0.0);
  CHECK_THROWS_AS(bspline_hat(order({0.0, 1, 0, 0}, -1.0), 1.0), PreconditionError);
}

TEST_CASE("B-hat agrees with complex_pow_quat of Xi") {
  Gen gen(203);
  for (int n = 0; n < 500; ++n) {
    const Quaternion q = gen.order(0.6, 5, 2);
    const double xi = gen.uniform(-30, 30);
    CHECK(testing::rel_distance(bspline_hat(order(q), xi), complex_pow_quat(xi_symbol(xi).value, q)) < 1e-10);
  }
}

TEST_CASE("B-hat modulus identity and sandwich") {
  Gen gen(204);
  for (int n = 0; n < 1000; ++n) {
    const Quaternion q = gen.order(0.6, 5, 1.5);
    const double xi = gen.uniform(-40, 40);
    const double r = vector_norm(q);
    const double full = norm_sq(bspline_hat(order(q), xi));
    const double scalar = norm_sq(bspline_hat(order(Quaternion::real(q.a)), xi));
    const double arg = xi_symbol(xi).log_value->imag();
    CHECK(full == doctest::Approx(scalar * std::cosh(2 * r * arg)).epsilon(1e-10));
    CHECK(full == doctest::Approx(bspline_hat_modulus_sq(q, xi)).epsilon(1e-10));
    CHECK(scalar <= full * (1 + 1e-12));
    CHECK(full <= scalar * std::cosh(2 * kPi * r) * (1 + 1e-12));
  }
}

TEST_CASE("B-hat decays like |xi|^{-Sc q}") {
  const Quaternion q{1.7, 0.4, 0.2, -0.3};
  const double bound = std::pow(2.0, q.a) * std::sqrt(std::cosh(2 * kPi * vector_norm(q)));
  double worst = 0.0;
  for (int i = 0; i <= 20000; ++i) {
    const double xi = std::pow(10.0, 1.0 + 3.0 * i / 20000.0);
    worst = std::max(worst, abs(bspline_hat(order(q), xi)) * std::pow(xi, q.a));
  }
  CHECK(worst <= bound);
  CHECK(worst > 0.1);
}

TEST_CASE("products of B-hats: parallel vs non-parallel orders") {
  const Quaternion q1{1.5, 0.3, -0.6, 0.9};
  const Quaternion q2{2.2, -0.2, 0.4, -0.6};
  const Quaternion p1{1.5, 1, 0, 0};
  const Quaternion p2{1.5, 0, 1, 0};
  double parallel = 0.0;
  double crossed = 0.0;
  for (int i = 0; i < 512; ++i) {
    const double xi = -8 * kPi + 16 * kPi * (i + 0.5) / 512;
    parallel = std::max(parallel, abs(bspline_hat(order(q1), xi) * bspline_hat(order(q2), xi) -
                                      bspline_hat(order(q1 + q2), xi)));
    crossed = std::max(crossed, abs(bspline_hat(order(p1), xi) * bspline_hat(order(p2), xi) -
                                    bspline_hat(order(p1 + p2), xi)));
  }
  CHECK(parallel < 1e-10);
  CHECK(crossed > 1e-4);
}

TEST_CASE("the multipliers (-i xi)^q1 and (1 - e^{-i xi})^q2 commute for parallel v") {
  const Quaternion q1{0.7, 0.2, 0.4, -0.1};
  const Quaternion q2 = Quaternion{1.9, 0, 0, 0} + q1.vector() * -2.5;
  Gen gen(205);
  for (int n = 0; n < 500; ++n) {
    const double xi = gen.uniform(-20, 20);
    const Biquaternion m1 = complex_pow_quat(Complex(0, -xi), q1);
    const Biquaternion m2 = complex_pow_quat(1.0 - std::exp(Complex(0, -xi)), q2);
    CHECK(abs(m1 * m2 - m2 * m1) <= 1e-12 * std::max(1.0, abs(m1) * abs(m2)));
  }
}

TEST_CASE("mask H0") {
  const SplineOrder q = order({3, 1, 0, 0}, 1.0);
  CHECK(abs(mask_h0(q, 0.0) - Biquaternion::real(1.0)) < 1e-15);
  CHECK(mask_h0(q, kPi) == Biquaternion{});
  CHECK(mask_h0(q, 3 * kPi) == Biquaternion{});
  Gen gen(206);
  double sup = 0.0;
  for (int n = 0; n < 500; ++n) {
    const double xi = gen.uniform(-10, 10);
    const Biquaternion h = mask_h0(q, xi);
    sup = std::max(sup, abs(h));
    // 2 pi periodic.
    CHECK(abs(mask_h0(q, xi + 2 * kPi) - h) < 1e-12);
    // Closed form 2^{-q} (1 + e^{-i xi})^q.
    const Biquaternion direct = complex_pow_quat(2.0, -q.value()) * complex_pow_quat(1.0 + std::exp(Complex(0, -xi)), q.value());
    CHECK(abs(direct - h) < 1e-12);
    // Two-scale relation B^(2 xi) = H0(xi) B^(xi).
    const Biquaternion den = bspline_hat(q, xi);
    if (abs(den) > 1e-8) {
      const Biquaternion ratio = bspline_hat(q, 2 * xi) * inverse(den);
      CHECK(abs(ratio - h) < 1e-9 * std::max(1.0, abs(h)));
    }
  }
  CHECK(sup < 2.0);
  CHECK_THROWS_AS(mask_h0(order({1.0, 0, 0, 0}), 0.3), PreconditionError);
}

TEST_CASE("1 - |H0|^2 has a double zero at the origin") {
  const SplineOrder q = order({3, 1, 0, 0}, 1.0);
  const auto defect = [&](double xi) { return std::abs(1.0 - norm_sq(mask_h0(q, xi))); };
  const double slope = log_slope(1e-4, defect(1e-4), 1e-2, defect(1e-2));
  CHECK(slope == doctest::Approx(2.0).epsilon(0.005));
  // Leading coefficient a/4 - |v|^2/2.
  CHECK(defect(1e-3) / 1e-6 == doctest::Approx(0.25).epsilon(1e-3));
}

TEST_CASE("mask coefficients") {
  const MaskCoefficients hat = mask_coefficients(order(Quaternion::real(2), 1.0), 1e-12);
  REQUIRE(hat.h.size() == 3);
  CHECK(hat.h[0].a == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(hat.h[1].a == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(hat.h[2].a == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(hat.truncation_error == 0.0);

  const Quaternion q{3, 1, 0, 0};
  const MaskCoefficients m = mask_coefficients(order(q, 1.0), 1e-8);
  const Quaternion two_neg = real_part(complex_pow_quat(2.0, -q));
  Quaternion sum;
  for (std::size_t k = 0; k < m.h.size(); ++k) {
    CHECK(testing::distance(m.h[k], two_neg * binom_quat(q, static_cast<int>(k))) <= 1e-14 + 1e-12 * abs(m.h[k]));
    sum += m.h[k];
  }
  CHECK(abs(sum - Quaternion::real(1)) < 1e-8);
  CHECK(m.truncation_error < 1e-8);
  CHECK_THROWS_AS(mask_coefficients(order({1.0, 1, 0, 0}), 1e-8), PreconditionError);
}

TEST_CASE("periodized symbol of the hat function") {
  const SplineOrder q = order(Quaternion::real(2), 0.5);
  const RieszBounds rb = riesz_bounds(q, 512);
  CHECK(rb.shifts >= 464);
  for (std::size_t i = 0; i < rb.xi.size(); ++i) {
    CHECK(rb.symbol[i] == doctest::Approx((2 + std::cos(rb.xi[i])) / 3).epsilon(1e-8));
  }
  CHECK(rb.lower == doctest::Approx(1.0 / 3).epsilon(1e-8));
  CHECK(rb.upper == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rb.lower >= 1.0 / 3 - rb.tail_bound);
}

TEST_CASE("periodized symbol matches direct shifted sums") {
  Gen gen(207);
  for (int n = 0; n < 100; ++n) {
    const Quaternion q = gen.order(0.8, 4, 1.5);
    const double xi = gen.uniform(-20, 20);
    double direct = 0.0;
    for (int k = -8; k <= 8; ++k) direct += norm_sq(bspline_hat(order(q), xi + 2 * kPi * k));
    CHECK(periodized_symbol(q, xi, 8) == doctest::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("Riesz bounds with vector parts") {
  const Quaternion q{3, 1, -1, 0};
  const RieszBounds full = riesz_bounds(order(q, 0.5), 1024);
  const RieszBounds scalar = riesz_bounds(order(Quaternion::real(3), 0.5), 1024, full.shifts);
  CHECK(full.lower > 0.0);
  CHECK(std::isfinite(full.upper));
  const double c = std::cosh(kPi * vector_norm(q));
  for (std::size_t i = 0; i < full.xi.size(); ++i) {
    CHECK(scalar.symbol[i] <= full.symbol[i]);
    CHECK(full.symbol[i] >= scalar.lower);
    CHECK(full.symbol[i] <= scalar.upper * c);
  }
  // Independent of the thread count.
  const RieszBounds threaded = riesz_bounds(order(q, 0.5), 1024, 0, 4);
  CHECK(threaded.symbol == full.symbol);
}

TEST_CASE("Riesz bound errors") {
  CHECK_THROWS_AS(riesz_bounds(order(Quaternion::real(0.5), 0.0)), PreconditionError);
  CHECK_THROWS_AS(riesz_bounds(order(Quaternion{0.7, 1, 0, 0}, 0.5), 64), TruncationError);
}

TEST_CASE("L2 and L1 norms") {
  const NormEstimates hat = l2_l1_norm_estimates(order(Quaternion::real(2), 0.5));
  CHECK(hat.l2_sq == doctest::Approx(4 * kPi / 3).epsilon(1e-7));
  REQUIRE(hat.l1.has_value());
  // |B^_2| = sinc^2(xi/2) integrates to 2 pi.
  CHECK(std::abs(*hat.l1 - 2 * kPi) <= *hat.l1_tail);
  CHECK(*hat.l1 <= 2 * kPi);

  const NormEstimates q = l2_l1_norm_estimates(order({2, 1, 0, 0}, 0.5));
  CHECK(q.l2_sq <= std::cosh(kPi) * 4 * kPi / 3);
  CHECK(q.l2_sq <= q.l2_bound);
  CHECK(*q.l1 <= *q.l1_bound);

  const NormEstimates low = l2_l1_norm_estimates(order({1.5, 0, 0, 1}, 0.5));
  EvalConfig wide;
  wide.freq_cutoff = 2 * low.cutoff;
  const NormEstimates doubled = l2_l1_norm_estimates(order({1.5, 0, 0, 1}, 0.5), wide);
  CHECK(std::abs(doubled.l2_sq - low.l2_sq) < 1e-6);
  CHECK(low.l2_sq <= low.l2_bound);

  const NormEstimates no_l1 = l2_l1_norm_estimates(order(Quaternion::real(0.8), 0.5));
  CHECK_FALSE(no_l1.l1.has_value());
  CHECK_THROWS_AS(l2_l1_norm_estimates(order(Quaternion::real(0.5), 0.0)), PreconditionError);
}
