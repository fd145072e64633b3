#include "qspline/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "qspline/error.hpp"
#include "qspline/extrapolation.hpp"

namespace qspline {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(w) on some branch, without overflow for large |Im w|.
Complex log_sin(Complex w) {
  const Complex i(0.0, 1.0);
  if (w.imag() > 1.0) return -i * w + std::log((std::exp(2.0 * i * w) - 1.0) / (2.0 * i));
  if (w.imag() < -1.0) return i * w + std::log((1.0 - std::exp(-2.0 * i * w)) / (2.0 * i));
  return std::log(std::sin(w));
}

bool is_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex log1p_complex(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  return {0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x)};
}

// Neumaier-compensated running sum of complex terms.
struct CompensatedSum {
  double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0;

  static void add(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }
  void operator+=(Complex z) {
    add(re, re_c, z.real());
    add(im, im_c, z.imag());
  }
  Complex value() const { return {re + re_c, im + im_c}; }
};

Complex order_as_complex(const Quaternion& q) { return {q.a, vector_norm(q)}; }

void require_gauss_domain(const Quaternion& q, std::int64_t n) {
  if (!(q.a > 0.0)) throw PreconditionError("Gauss limit requires Sc(q) > 0");
  if (n < 1) throw PreconditionError("Gauss limit requires n >= 1");
}

Complex gauss_log_value(Complex w, std::int64_t n, const CompensatedSum& sum) {
  return w * std::log(static_cast<double>(n)) - std::log(w) - sum.value();
}

std::vector<Quaternion> binomials_upto(const Quaternion& q, int max_j) {
  std::vector<Quaternion> b(static_cast<std::size_t>(max_j) + 1);
  b[0] = Quaternion::real(1.0);
  Quaternion poch = Quaternion::real(1.0);
  double factorial = 1.0;
  for (int j = 1; j <= max_j; ++j) {
    const Quaternion step = q - Quaternion::real(j - 1);
    if (j <= 20) {
      poch = poch * step;
      factorial *= j;
      b[j] = poch / factorial;
    } else {
      b[j] = (b[j - 1] * step) / static_cast<double>(j);
    }
  }
  return b;
}

}  // namespace

Complex complex_log_gamma(Complex z) {
  if (is_pole(z)) throw PoleError("Gamma has a pole at " + std::to_string(z.real()));
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  const double pi = std::numbers::pi;
  return std::log(pi) - log_sin(pi * z) - lanczos_log_gamma(1.0 - z);
}

Complex complex_gamma(Complex z) { return std::exp(complex_log_gamma(z)); }

const char* to_string(GammaMethod m) {
  switch (m) {
    case GammaMethod::complexified: return "complexified";
    case GammaMethod::quadrature: return "quadrature";
    case GammaMethod::gauss_limit: return "gauss_limit";
  }
  return "unknown";
}

GammaValue gamma_quat(const Quaternion& q) {
  const double r = vector_norm(q);
  if (r == 0.0) {
    if (is_pole(q.a)) throw PoleError("Gamma has a pole at " + std::to_string(q.a));
    return {Quaternion::real(complex_gamma(q.a).real()), q, GammaMethod::complexified};
  }
  const Complex lower = complex_gamma({q.a, -r});
  const Complex upper = complex_gamma({q.a, r});
  const Complex sc = 0.5 * (lower + upper);
  const Complex vc = Complex(0.0, 0.5) * (lower - upper);
  // Both are real up to rounding; the imaginary residue is dropped.
  const double s = vc.real() / r;
  return {{sc.real(), s * q.v1, s * q.v2, s * q.v3}, q, GammaMethod::complexified};
}

Quaternion gamma_gauss_limit(const Quaternion& q, std::int64_t n) {
  require_gauss_domain(q, n);
  if (n <= 170) {
    // prod_k k/(q+k), accumulated factor by factor to stay in range.
    Quaternion ratio = inverse(q);
    for (std::int64_t k = 1; k <= n; ++k) {
      ratio = ratio * inverse(q + Quaternion::real(static_cast<double>(k))) * static_cast<double>(k);
    }
    return power_from_real_log(std::log(static_cast<double>(n)), q) * ratio;
  }
  // log G_n = w log n - log w - sum_k log(1 + w/k)
  const Complex w = order_as_complex(q);
  CompensatedSum sum;
  for (std::int64_t k = 1; k <= n; ++k) sum += log1p_complex(w / static_cast<double>(k));
  return along_axis(std::exp(gauss_log_value(w, n, sum)), q);
}

Quaternion gamma_gauss_limit_extrapolated(const Quaternion& q, std::int64_t n) {
  require_gauss_domain(q, n);
  const Complex w = order_as_complex(q);
  CompensatedSum sum;
  Complex g_n;
  for (std::int64_t k = 1; k <= 2 * n; ++k) {
    sum += log1p_complex(w / static_cast<double>(k));
    if (k == n) g_n = std::exp(gauss_log_value(w, n, sum));
  }
  const Complex g_2n = std::exp(gauss_log_value(w, 2 * n, sum));
  return along_axis(2.0 * g_2n - g_n, q);
}

Quaternion pochhammer(const Quaternion& q, int j) {
  if (j < 0) throw PreconditionError("Pochhammer index must be non-negative");
  Quaternion p = Quaternion::real(1.0);
  for (int k = 0; k < j; ++k) p = p * (q - Quaternion::real(k));
  return p;
}

Quaternion pochhammer_complex_path(const Quaternion& q, int j) {
  if (j < 0) throw PreconditionError("Pochhammer index must be non-negative");
  const Complex w = order_as_complex(q);
  Complex p = 1.0;
  for (int k = 0; k < j; ++k) p *= w - static_cast<double>(k);
  return along_axis(p, q);
}

Quaternion binom_quat(const Quaternion& q, int j) {
  if (j < 0) throw PreconditionError("binomial index must be non-negative");
  return binomials_upto(q, j).back();
}

PochhammerTable::PochhammerTable(const Quaternion& q, int max_j) : q_(q) {
  if (max_j < 0) throw PreconditionError("Pochhammer table size must be non-negative");
  poch_.resize(static_cast<std::size_t>(max_j) + 1);
  poch_[0] = Quaternion::real(1.0);
  for (int j = 0; j < max_j; ++j) poch_[j + 1] = poch_[j] * (q - Quaternion::real(j));
  binom_ = binomials_upto(q, max_j);
}

Biquaternion binomial_series(const Quaternion& q, Complex z, double tol, SeriesReport* report) {
  if (!(q.a > 0.0)) throw PreconditionError("binomial series requires Sc(q) > 0");
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  const double modulus = std::abs(z);
  if (modulus > 1.0 + 1e-12) throw PreconditionError("binomial series requires |z| <= 1");
  SeriesReport local;
  SeriesReport& rep = report ? *report : local;
  rep = {};
  const bool boundary = modulus > 1.0 - 1e-12;
  rep.slow_convergence = boundary && q.a <= 1.0;

  // Non-negative integer order: the series terminates.
  if (vector_norm(q) == 0.0 && q.a == std::floor(q.a) && q.a < 1e5) {
    const int n = static_cast<int>(q.a);
    const std::vector<Quaternion> b = binomials_upto(q, n);
    Biquaternion s;
    Complex zj = 1.0;
    for (int j = 0; j <= n; ++j, zj *= z) s += b[j] * zj;
    rep.terms = n + 1;
    return s;
  }

  constexpr std::int64_t kMaxTerms = 100000;
  constexpr int kRun = 5;
  const std::int64_t direct_limit = boundary ? 512 : kMaxTerms;

  Biquaternion s;
  Quaternion b = Quaternion::real(1.0);
  Complex zj = 1.0;
  int run = 0;
  std::int64_t j = 0;
  for (; j < direct_limit; ++j) {
    const Biquaternion term = b * zj;
    s += term;
    // The terms decay like j^{-Sc(q)-1} |z|^j, so the remaining tail is
    // bounded by the current term times min(j / Sc(q), 1 / (1 - |z|)).
    const double tail_factor =
        std::min((j + 1.0) / q.a, boundary ? HUGE_VAL : 1.0 / (1.0 - modulus));
    run = (abs(term) * std::max(tail_factor, 1.0) < tol * std::max(abs(s), 1.0)) ? run + 1 : 0;
    if (run >= kRun) {
      rep.terms = j + 1;
      return s;
    }
    b = (b * (q - Quaternion::real(static_cast<double>(j)))) / static_cast<double>(j + 1);
    zj *= z;
  }
  if (!boundary) throw TruncationError("binomial series did not reach tolerance within 1e5 terms");

  // Boundary: S_J - S ~ rho^J J^{-e} sum_m c_m J^{-m} with rho = -z, where
  // e = Sc(q) at z = -1 (non-oscillating terms) and Sc(q) + 1 otherwise.
  const Complex unit = z / modulus;
  const bool at_minus_one = std::abs(unit + 1.0) < 1e-12;
  TailModel model;
  model.components.push_back({-unit, at_minus_one ? q.a : q.a + 1.0});
  model.log_frequency = vector_norm(q);
  model.orders = 4;

  std::vector<double> nodes;
  std::vector<Biquaternion> sums;
  std::int64_t next = 512;
  const std::int64_t last = 16384;
  // Continue the recursion from the state reached above (S_{512} already
  // includes terms 0..511).
  for (;;) {
    if (j == next) {
      nodes.push_back(static_cast<double>(j));
      sums.push_back(s);
      if (next >= last) break;
      next = static_cast<std::int64_t>(std::llround(static_cast<double>(next) * std::pow(2.0, 0.25)));
    }
    const Biquaternion term = b * zj;
    s += term;
    b = (b * (q - Quaternion::real(static_cast<double>(j)))) / static_cast<double>(j + 1);
    zj *= unit;
    ++j;
  }
  const ExtrapolationResult fit = extrapolate_limit(nodes, sums, model);
  rep.terms = j;
  rep.extrapolated = true;
  rep.fit_residual = fit.fit_residual;
  return fit.limit;
}

}  // namespace qspline
