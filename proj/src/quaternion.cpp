#include "qspline/quaternion.hpp"

#include <cmath>

#include "qspline/error.hpp"
#include "qspline/rotation.hpp"

namespace qspline {

Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_sq(q);
  if (n2 == 0.0) throw DomainError("inverse of the zero quaternion");
  return conj(q) / n2;
}

Biquaternion inverse(const Biquaternion& p) {
  const Complex n = p.a * p.a + p.v1 * p.v1 + p.v2 * p.v2 + p.v3 * p.v3;
  if (std::abs(n) <= 1e-300) throw DomainError("biquaternion is a zero divisor");
  const Complex s = 1.0 / n;
  return {p.a * s, -p.v1 * s, -p.v2 * s, -p.v3 * s};
}

Quaternion quat_exp(const Quaternion& q) {
  const double r = vector_norm(q);
  const double ea = std::exp(q.a);
  if (r == 0.0) return Quaternion::real(ea);
  const double k = ea * std::sin(r) / r;
  return {ea * std::cos(r), k * q.v1, k * q.v2, k * q.v3};
}

Biquaternion quat_exp(const Biquaternion& p) {
  // (c . e)^2 = -(c1^2 + c2^2 + c3^2); cos s and sin(s)/s are even in s, so
  // the branch of s = sqrt(c . c) does not matter.
  const Complex s2 = p.v1 * p.v1 + p.v2 * p.v2 + p.v3 * p.v3;
  Complex c;
  Complex sinc;
  if (std::abs(s2) < 1e-8) {
    c = 1.0 - s2 / 2.0 + s2 * s2 / 24.0;
    sinc = 1.0 - s2 / 6.0 + s2 * s2 / 120.0;
  } else {
    const Complex s = std::sqrt(s2);
    c = std::cos(s);
    sinc = std::sin(s) / s;
  }
  const Complex e0 = std::exp(p.a);
  const Complex k = e0 * sinc;
  return {e0 * c, k * p.v1, k * p.v2, k * p.v3};
}

Complex principal_log(Complex z) {
  if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
  return std::log(z);
}

Biquaternion power_from_log(const Complex& log_z, const Quaternion& q) {
  const Complex za = std::exp(q.a * log_z);
  const double r = vector_norm(q);
  if (r == 0.0) return Biquaternion::real(za);
  const Complex arg = r * log_z;
  const Complex s = za * std::sin(arg) / r;
  return {za * std::cos(arg), s * q.v1, s * q.v2, s * q.v3};
}

Quaternion power_from_real_log(double log_z, const Quaternion& q) {
  const double za = std::exp(q.a * log_z);
  const double r = vector_norm(q);
  if (r == 0.0) return Quaternion::real(za);
  const double arg = r * log_z;
  const double s = za * std::sin(arg) / r;
  return {za * std::cos(arg), s * q.v1, s * q.v2, s * q.v3};
}

Biquaternion complex_pow_quat(Complex z, const Quaternion& q) {
  if (z == Complex(0.0, 0.0)) {
    if (q.a > 0.0) return {};
    if (q == Quaternion{}) return Biquaternion::real(1.0);
    throw DomainError("0^q is undefined for Sc(q) <= 0");
  }
  return power_from_log(principal_log(z), q);
}

Quaternion along_axis(const Complex& c, const Quaternion& q) {
  const double r = vector_norm(q);
  if (r == 0.0) return Quaternion::real(c.real());
  const double s = c.imag() / r;
  return {c.real(), s * q.v1, s * q.v2, s * q.v3};
}

Biquaternion along_axis(const Complex& x, const Complex& y, const Quaternion& q) {
  const double r = vector_norm(q);
  if (r == 0.0) return Biquaternion::real(x);
  const Complex s = y / r;
  return {x, s * q.v1, s * q.v2, s * q.v3};
}

bool semigroup_compatible(const Quaternion& q1, const Quaternion& q2, double tol) {
  const Vec3 v1 = vector_part(q1);
  const Vec3 v2 = vector_part(q2);
  return norm(cross(v1, v2)) <= tol * norm(v1) * norm(v2);
}

SplineOrder::SplineOrder(const Quaternion& q, double floor)
    : q_(q), floor_(floor), vnorm_(qspline::vector_norm(q)) {
  if (!(q.a > floor)) {
    throw PreconditionError("order requires Sc(q) > " + std::to_string(floor));
  }
  if (vnorm_ > 0.0) direction_ = Vec3{q.v1 / vnorm_, q.v2 / vnorm_, q.v3 / vnorm_};
}

Rotation3::Rotation3() : m_{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}} {}

Rotation3 Rotation3::from_axis_angle(const Vec3& axis, double angle) {
  const double n = norm(axis);
  if (n == 0.0) throw PreconditionError("rotation axis must be nonzero");
  const double x = axis[0] / n, y = axis[1] / n, z = axis[2] / n;
  const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  Rotation3 r;
  r.m_ = {{{t * x * x + c, t * x * y - s * z, t * x * z + s * y},
           {t * x * y + s * z, t * y * y + c, t * y * z - s * x},
           {t * x * z - s * y, t * y * z + s * x, t * z * z + c}}};
  return r;
}

Vec3 Rotation3::apply(const Vec3& x) const {
  Vec3 y{};
  for (int i = 0; i < 3; ++i) y[i] = m_[i][0] * x[0] + m_[i][1] * x[1] + m_[i][2] * x[2];
  return y;
}

Rotation3 Rotation3::transpose() const {
  Rotation3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] = m_[j][i];
  return r;
}

Quaternion rotate_vector_part(const Rotation3& sigma, const Quaternion& q) {
  const Vec3 w = sigma.apply(vector_part(q));
  return {q.a, w[0], w[1], w[2]};
}

}  // namespace qspline
