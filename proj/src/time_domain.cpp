#include "qspline/time_domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qspline/error.hpp"
#include "qspline/parallel.hpp"

namespace qspline {

namespace {

// Componentwise Kahan summation of quaternions.
class KahanQuaternion {
 public:
  void add(const Quaternion& x) {
    for (int i = 0; i < 4; ++i) {
      const double y = x[i] - comp_[i];
      const double t = sum_[i] + y;
      comp_[i] = (t - sum_[i]) - y;
      sum_[i] = t;
    }
  }
  Quaternion value() const { return {sum_[0], sum_[1], sum_[2], sum_[3]}; }

 private:
  double sum_[4] = {0, 0, 0, 0};
  double comp_[4] = {0, 0, 0, 0};
};

bool is_nonnegative_integer(const Quaternion& q) {
  return vector_norm(q) == 0.0 && q.a >= 0.0 && q.a == std::floor(q.a);
}

int grid_step_ratio(double dt) {
  if (!(dt > 0.0)) throw PreconditionError("grid step must be positive");
  const double m = std::round(1.0 / dt);
  if (m < 1.0 || std::abs(m * dt - 1.0) > 1e-9) throw PreconditionError("grid step must divide 1");
  return static_cast<int>(m);
}

}  // namespace

Quaternion truncated_power(double t, const Quaternion& q) {
  if (!(t > 0.0)) return {};
  return power_from_real_log(std::log(t), q);
}

BsplineEvaluator::BsplineEvaluator(const SplineOrder& q, double max_t)
    : q_(q.value()),
      q_minus_one_(q.value() - Quaternion::real(1.0)),
      table_(q.value(), static_cast<int>(std::max(0.0, std::ceil(max_t)))) {
  if (!(q.scalar() > 1.0)) throw PreconditionError("time-domain evaluation requires Sc(q) > 1");
  const Quaternion g = gamma_quat(q_).value;
  if (abs(g) < 1e-300) throw DomainError("Gamma(q) is too small to invert");
  gamma_inv_ = inverse(g);
}

Quaternion BsplineEvaluator::operator()(double t, EvalReport* report) const {
  if (report) *report = {};
  if (!(t > 0.0)) return {};
  // Terms with k >= t vanish because (t - k)_+^{q-1} = 0.
  const int kmax = static_cast<int>(std::ceil(t)) - 1;
  if (kmax > table_.max_index()) throw PreconditionError("t lies outside the evaluator range");
  KahanQuaternion sum;
  double largest = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    Quaternion term = table_.binomial(k) * truncated_power(t - k, q_minus_one_);
    if (k % 2 == 1) term = -term;
    largest = std::max(largest, abs(term));
    sum.add(term);
  }
  const Quaternion s = sum.value();
  if (report) {
    const double m = abs(s);
    report->terms = kmax + 1;
    report->amplification = m > 0.0 ? largest / m : std::numeric_limits<double>::infinity();
    report->ill_conditioned = report->amplification > 1e12;
  }
  return gamma_inv_ * s;
}

Quaternion bspline_time(const SplineOrder& q, double t, EvalReport* report) {
  return BsplineEvaluator(q, t)(t, report);
}

SampledField bspline_time_grid(const SplineOrder& q, double t0, double dt, int n, int threads) {
  if (!(dt > 0.0)) throw PreconditionError("grid step must be positive");
  if (n < 1) throw PreconditionError("grid needs at least one node");
  SampledField out;
  out.t0 = t0;
  out.dt = dt;
  out.order = q.value();
  out.method = "time_domain";
  out.samples.resize(static_cast<std::size_t>(n));
  const BsplineEvaluator eval(q, out.abscissa(static_cast<std::size_t>(n - 1)));
  parallel_for(out.samples.size(), threads, [&](std::size_t i) { out.samples[i] = eval(out.abscissa(i)); });
  return out;
}

int binomial_truncation(const Quaternion& q, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  if (is_nonnegative_integer(q)) return static_cast<int>(q.a) + 1;
  if (!(q.a > 0.0)) throw TruncationError("binomial coefficients do not decay for Sc(q) <= 0");
  constexpr int kMaxTerms = 100000;
  constexpr int kRun = 5;
  Quaternion b = Quaternion::real(1.0);
  int run = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double tail = abs(b) * std::max((k + 1.0) / q.a, 1.0);
    run = (k > q.a && tail < tol) ? run + 1 : 0;
    if (run >= kRun) return k + 1;
    b = (b * (q - Quaternion::real(k))) / static_cast<double>(k + 1);
  }
  throw TruncationError("binomial coefficients did not reach tolerance within 1e5 terms");
}

SampledField backwards_difference(const Quaternion& q, const SampledField& f, double tol) {
  if (f.samples.empty()) throw PreconditionError("sampled field is empty");
  const int m = grid_step_ratio(f.dt);
  const int n = static_cast<int>(f.size());
  int terms = (n - 1) / m + 1;
  if (q.a > 0.0 || is_nonnegative_integer(q)) terms = std::min(terms, binomial_truncation(q, tol));
  const PochhammerTable table(q, terms - 1);

  SampledField out = f;
  out.order = q;
  out.method = "backwards_difference";
  for (int i = 0; i < n; ++i) {
    KahanQuaternion sum;
    for (int k = 0; k < terms && i - k * m >= 0; ++k) {
      const Quaternion term = table.binomial(k) * f.samples[i - k * m];
      sum.add(k % 2 == 1 ? -term : term);
    }
    out.samples[i] = sum.value();
  }
  return out;
}

SampledField backwards_difference(const Quaternion& q, const std::function<Quaternion(double)>& f, double t0,
                                  double dt, int n, double tol, std::optional<double> support_start) {
  if (!(dt > 0.0)) throw PreconditionError("grid step must be positive");
  if (n < 1) throw PreconditionError("grid needs at least one node");
  SampledField out;
  out.t0 = t0;
  out.dt = dt;
  out.order = q;
  out.method = "backwards_difference";
  out.samples.resize(static_cast<std::size_t>(n));

  const double t_last = out.abscissa(static_cast<std::size_t>(n - 1));
  const auto terms_at = [&](double t) {
    return support_start ? std::max(0, static_cast<int>(std::floor(t - *support_start)) + 1) : 0;
  };
  const int fixed_terms = support_start ? 0 : binomial_truncation(q, tol);
  const int max_terms = support_start ? terms_at(t_last) : fixed_terms;
  const PochhammerTable table(q, std::max(0, max_terms - 1));
  for (int i = 0; i < n; ++i) {
    const double t = out.abscissa(static_cast<std::size_t>(i));
    const int terms = support_start ? terms_at(t) : fixed_terms;
    KahanQuaternion sum;
    for (int k = 0; k < terms; ++k) {
      const Quaternion term = table.binomial(k) * f(t - k);
      sum.add(k % 2 == 1 ? -term : term);
    }
    out.samples[i] = sum.value();
  }
  return out;
}

double recursion_check(const SplineOrder& q, double t) {
  if (!(q.scalar() > 2.0)) throw PreconditionError("recursion check requires Sc(q) > 2");
  const Quaternion& p = q.value();
  const Quaternion one = Quaternion::real(1.0);
  const SplineOrder lower(p - one, 1.0);
  const Quaternion lhs = (p - one) * bspline_time(q, t);
  const Quaternion rhs = bspline_time(lower, t) * t + (p - Quaternion::real(t)) * bspline_time(lower, t - 1.0);
  return abs(lhs - rhs);
}

}  // namespace qspline
