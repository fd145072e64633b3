#pragma once

// Real quaternions (H_R) and quaternions with complex components (H_C).
//
// Units e1, e2, e3 satisfy e_i^2 = -1, e1 e2 = e3, e2 e3 = e1, e3 e1 = e2.
// The complex unit i of H_C commutes with every e_k.

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <optional>
#include <type_traits>

namespace qspline {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

namespace detail {

inline double conj_component(double x) { return x; }
inline Complex conj_component(const Complex& x) { return std::conj(x); }

}  // namespace detail

template <typename T>
struct BasicQuaternion {
  T a{};
  T v1{};
  T v2{};
  T v3{};

  constexpr BasicQuaternion() = default;
  constexpr BasicQuaternion(T scalar, T x, T y, T z) : a(scalar), v1(x), v2(y), v3(z) {}

  // Scalar embedding.
  static constexpr BasicQuaternion real(T scalar) { return {scalar, T{}, T{}, T{}}; }

  // H_R embeds into H_C.
  template <typename U>
    requires(!std::same_as<U, T> && std::convertible_to<U, T>)
  constexpr BasicQuaternion(const BasicQuaternion<U>& other)  // NOLINT(google-explicit-constructor)
      : a(other.a), v1(other.v1), v2(other.v2), v3(other.v3) {}

  constexpr T scalar() const { return a; }
  constexpr BasicQuaternion vector() const { return {T{}, v1, v2, v3}; }

  constexpr T operator[](int i) const {
    switch (i) {
      case 0: return a;
      case 1: return v1;
      case 2: return v2;
      default: return v3;
    }
  }

  BasicQuaternion& operator+=(const BasicQuaternion& o) {
    a += o.a; v1 += o.v1; v2 += o.v2; v3 += o.v3;
    return *this;
  }
  BasicQuaternion& operator-=(const BasicQuaternion& o) {
    a -= o.a; v1 -= o.v1; v2 -= o.v2; v3 -= o.v3;
    return *this;
  }
  BasicQuaternion& operator*=(const T& s) {
    a *= s; v1 *= s; v2 *= s; v3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const BasicQuaternion&, const BasicQuaternion&) = default;
};

using Quaternion = BasicQuaternion<double>;
using Biquaternion = BasicQuaternion<Complex>;

template <typename T>
constexpr BasicQuaternion<T> operator+(BasicQuaternion<T> p, const BasicQuaternion<T>& q) {
  return p += q;
}
template <typename T>
constexpr BasicQuaternion<T> operator-(BasicQuaternion<T> p, const BasicQuaternion<T>& q) {
  return p -= q;
}
template <typename T>
constexpr BasicQuaternion<T> operator-(const BasicQuaternion<T>& p) {
  return {-p.a, -p.v1, -p.v2, -p.v3};
}

// Hamilton product. For pure vectors this is -<v,w> + v ^ w.
template <typename T>
constexpr BasicQuaternion<T> operator*(const BasicQuaternion<T>& p, const BasicQuaternion<T>& q) {
  return {p.a * q.a - p.v1 * q.v1 - p.v2 * q.v2 - p.v3 * q.v3,
          p.a * q.v1 + p.v1 * q.a + p.v2 * q.v3 - p.v3 * q.v2,
          p.a * q.v2 + p.v2 * q.a + p.v3 * q.v1 - p.v1 * q.v3,
          p.a * q.v3 + p.v3 * q.a + p.v1 * q.v2 - p.v2 * q.v1};
}

template <typename T>
constexpr BasicQuaternion<T> operator*(BasicQuaternion<T> p, const std::type_identity_t<T>& s) {
  return p *= s;
}
template <typename T>
constexpr BasicQuaternion<T> operator*(const std::type_identity_t<T>& s, BasicQuaternion<T> p) {
  return p *= s;
}
template <typename T>
constexpr BasicQuaternion<T> operator/(BasicQuaternion<T> p, const std::type_identity_t<T>& s) {
  return p *= (T{1} / s);
}

// Mixed H_R / H_C arithmetic promotes to H_C.
inline Biquaternion operator*(const Quaternion& p, const Biquaternion& q) { return Biquaternion(p) * q; }
inline Biquaternion operator*(const Biquaternion& p, const Quaternion& q) { return p * Biquaternion(q); }
inline Biquaternion operator+(const Quaternion& p, const Biquaternion& q) { return Biquaternion(p) + q; }
inline Biquaternion operator+(const Biquaternion& p, const Quaternion& q) { return p + Biquaternion(q); }
inline Biquaternion operator-(const Quaternion& p, const Biquaternion& q) { return Biquaternion(p) - q; }
inline Biquaternion operator-(const Biquaternion& p, const Quaternion& q) { return p - Biquaternion(q); }
inline Biquaternion operator*(const Quaternion& p, const Complex& s) { return Biquaternion(p) * s; }
inline Biquaternion operator*(const Complex& s, const Quaternion& p) { return s * Biquaternion(p); }
inline Biquaternion operator*(Biquaternion p, double s) { return p *= Complex(s); }
inline Biquaternion operator*(double s, Biquaternion p) { return p *= Complex(s); }
inline Biquaternion operator/(Biquaternion p, double s) { return p *= Complex(1.0 / s); }

// Conjugate: negates the vector part and, in H_C, complex-conjugates every
// component.
template <typename T>
constexpr BasicQuaternion<T> conj(const BasicQuaternion<T>& q) {
  using detail::conj_component;
  return {conj_component(q.a), -conj_component(q.v1), -conj_component(q.v2), -conj_component(q.v3)};
}

// Sum of squared component moduli; equals Sc(q conj(q)).
template <typename T>
double norm_sq(const BasicQuaternion<T>& q) {
  return std::norm(q.a) + std::norm(q.v1) + std::norm(q.v2) + std::norm(q.v3);
}

template <typename T>
double abs(const BasicQuaternion<T>& q) {
  return std::sqrt(norm_sq(q));
}

// <p,q> = Sc(p conj(q)) = sum_i p_i conj(q_i).
inline Complex scalar_product(const Biquaternion& p, const Biquaternion& q) {
  return p.a * std::conj(q.a) + p.v1 * std::conj(q.v1) + p.v2 * std::conj(q.v2) + p.v3 * std::conj(q.v3);
}

inline Vec3 vector_part(const Quaternion& q) { return {q.v1, q.v2, q.v3}; }
inline double vector_norm(const Quaternion& q) { return std::hypot(q.v1, q.v2, q.v3); }

inline double dot(const Vec3& v, const Vec3& w) { return v[0] * w[0] + v[1] * w[1] + v[2] * w[2]; }
inline Vec3 cross(const Vec3& v, const Vec3& w) {
  return {v[1] * w[2] - v[2] * w[1], v[2] * w[0] - v[0] * w[2], v[0] * w[1] - v[1] * w[0]};
}
inline double norm(const Vec3& v) { return std::hypot(v[0], v[1], v[2]); }
inline Quaternion pure(const Vec3& v) { return {0.0, v[0], v[1], v[2]}; }

// Componentwise real and imaginary parts of an H_C element.
inline Quaternion real_part(const Biquaternion& p) { return {p.a.real(), p.v1.real(), p.v2.real(), p.v3.real()}; }
inline Quaternion imag_part(const Biquaternion& p) { return {p.a.imag(), p.v1.imag(), p.v2.imag(), p.v3.imag()}; }

Quaternion inverse(const Quaternion& q);

// Algebraic inverse in H_C: p^{-1} = p*/(p p*), where p* negates the vector
// part without complex conjugation. Throws DomainError for zero divisors.
Biquaternion inverse(const Biquaternion& p);

Quaternion quat_exp(const Quaternion& q);
Biquaternion quat_exp(const Biquaternion& p);

// Principal logarithm, arg in (-pi, pi]. A signed zero imaginary part is
// treated as +0 so the negative real axis maps to +pi.
Complex principal_log(Complex z);

// z^q = z^a [cos(|v| log z) + (v/|v|) sin(|v| log z)] given L = log z.
Biquaternion power_from_log(const Complex& log_z, const Quaternion& q);

// Same with a real logarithm (z > 0); the result stays in H_R.
Quaternion power_from_real_log(double log_z, const Quaternion& q);

// z^q on the principal branch. 0^q = 0 for Sc(q) > 0, 0^0 = 1, DomainError
// otherwise.
Biquaternion complex_pow_quat(Complex z, const Quaternion& q);

// Image of x + iy under the isomorphism C -> span{1, v/|v|}: x + (v/|v|) y.
// With v = 0 the imaginary part is dropped.
Quaternion along_axis(const Complex& c, const Quaternion& q);

// x + (v/|v|) y for complex x, y.
Biquaternion along_axis(const Complex& x, const Complex& y, const Quaternion& q);

// True iff |v1 ^ v2| <= tol |v1| |v2|, i.e. the vector parts are linearly
// dependent and z^{q1} z^{q2} = z^{q1+q2} near z = 1.
bool semigroup_compatible(const Quaternion& q1, const Quaternion& q2, double tol = 1e-12);

// A quaternion order validated against an operation-specific floor on Sc(q).
class SplineOrder {
 public:
  SplineOrder(const Quaternion& q, double floor);

  const Quaternion& value() const { return q_; }
  double floor() const { return floor_; }
  double scalar() const { return q_.a; }
  double vector_norm() const { return vnorm_; }
  // v/|v|, absent when v = 0.
  const std::optional<Vec3>& direction() const { return direction_; }

 private:
  Quaternion q_;
  double floor_;
  double vnorm_;
  std::optional<Vec3> direction_;
};

}  // namespace qspline
