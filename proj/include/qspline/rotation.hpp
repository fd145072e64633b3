#pragma once

#include <array>

#include "qspline/quaternion.hpp"

namespace qspline {

// sigma in SO(3), stored as a row-major 3x3 matrix.
class Rotation3 {
 public:
  Rotation3();  // identity

  // Rodrigues' formula; the axis need not be normalized but must be nonzero.
  static Rotation3 from_axis_angle(const Vec3& axis, double angle);

  Vec3 apply(const Vec3& x) const;
  Rotation3 transpose() const;
  double operator()(int row, int col) const { return m_[row][col]; }

 private:
  std::array<std::array<double, 3>, 3> m_;
};

// (1 (x) sigma)(a + v) = a + sigma v.
Quaternion rotate_vector_part(const Rotation3& sigma, const Quaternion& q);

}  // namespace qspline
