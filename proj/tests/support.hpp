#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "qspline/quaternion.hpp"
#include "qspline/rotation.hpp"

namespace qspline::testing {

inline constexpr double kPi = std::numbers::pi;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Vec3 vec(double scale) { return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)}; }

  Vec3 unit_vec() {
    for (;;) {
      const Vec3 v = vec(1.0);
      const double n = norm(v);
      if (n > 0.1 && n <= 1.0) return {v[0] / n, v[1] / n, v[2] / n};
    }
  }

  Quaternion quat(double scale) {
    const Vec3 v = vec(scale);
    return {uniform(-scale, scale), v[0], v[1], v[2]};
  }

  // Sc in [a_lo, a_hi], |v| <= v_max.
  Quaternion order(double a_lo, double a_hi, double v_max) {
    const Vec3 dir = unit_vec();
    const double r = uniform(0.0, v_max);
    return {uniform(a_lo, a_hi), r * dir[0], r * dir[1], r * dir[2]};
  }

  Complex complex_in_disk(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(-kPi, kPi));
  }

  Rotation3 rotation() { return Rotation3::from_axis_angle(unit_vec(), uniform(-kPi, kPi)); }

 private:
  std::mt19937_64 rng_;
};

template <typename T>
double distance(const BasicQuaternion<T>& p, const BasicQuaternion<T>& q) {
  return abs(p - q);
}

inline double rel_distance(const Quaternion& p, const Quaternion& q) {
  return abs(p - q) / std::max(abs(q), 1e-300);
}

inline double rel_distance(const Biquaternion& p, const Biquaternion& q) {
  return abs(p - q) / std::max(abs(q), 1e-300);
}

// max_{i,j} |v_j x_i - v_i x_j| over the vector components.
inline double homogeneity_defect(const Quaternion& q, const Quaternion& x) {
  const Vec3 v = vector_part(q);
  const Vec3 y = vector_part(x);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(v[j] * y[i] - v[i] * y[j]));
  return worst;
}

}  // namespace qspline::testing
