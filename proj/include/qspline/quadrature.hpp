#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature over values that form a
// vector space: double, Complex, Quaternion, Biquaternion.

#include <algorithm>
#include <cmath>
#include <vector>

#include "qspline/quaternion.hpp"

namespace qspline {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Complex& x) { return std::abs(x); }
template <typename T>
double magnitude(const BasicQuaternion<T>& x) {
  return abs(x);
}

template <typename V>
struct QuadratureResult {
  V value{};
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

inline constexpr double kGkNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename V>
struct GkSegment {
  double lo;
  double hi;
  V value;
  double error;
  bool operator<(const GkSegment& o) const { return error < o.error; }
};

template <typename V, typename F>
GkSegment<V> gk15(F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const V fc = f(center);
  V kronrod = fc * kKronrodWeights[7];
  V gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGkNodes[i];
    const V pair = f(center - dx) + f(center + dx);
    kronrod += pair * kKronrodWeights[i];
    if (i % 2 == 1) gauss += pair * kGaussWeights[i / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, magnitude(kronrod - gauss)};
}

}  // namespace detail

// Subdivides the interval with the largest error estimate until the summed
// estimate is below max(abs_tol, rel_tol |I|) or max_intervals is reached.
template <typename V, typename F>
QuadratureResult<V> integrate_gk(F&& f, double lo, double hi, double abs_tol, double rel_tol = 0.0,
                                 int max_intervals = 4000) {
  using Segment = detail::GkSegment<V>;
  std::vector<Segment> heap;
  heap.push_back(detail::gk15<V>(f, lo, hi));
  V total = heap.front().value;
  double error = heap.front().error;
  int intervals = 1;
  while (error > std::max(abs_tol, rel_tol * magnitude(total)) && intervals < max_intervals) {
    std::pop_heap(heap.begin(), heap.end());
    const Segment worst = heap.back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      std::push_heap(heap.begin(), heap.end());
      break;
    }
    heap.pop_back();
    const Segment left = detail::gk15<V>(f, worst.lo, mid);
    const Segment right = detail::gk15<V>(f, mid, worst.hi);
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
    ++intervals;
    if (intervals % 64 == 0) {
      // Re-sum to stop cancellation drift in the running totals.
      total = V{};
      error = 0.0;
      for (const Segment& s : heap) {
        total += s.value;
        error += s.error;
      }
    } else {
      total += left.value + right.value - worst.value;
      error += left.error + right.error - worst.error;
    }
  }
  total = V{};
  error = 0.0;
  for (const Segment& s : heap) {
    total += s.value;
    error += s.error;
  }
  return {total, error, intervals, error <= std::max(abs_tol, rel_tol * magnitude(total))};
}

// Composite Simpson rule on n (even) subintervals.
template <typename V, typename F>
V integrate_simpson(F&& f, double lo, double hi, int n) {
  if (n % 2 == 1) ++n;
  const double h = (hi - lo) / n;
  V sum = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) sum += f(lo + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
  return sum * (h / 3.0);
}

}  // namespace qspline
