#include "qspline/extrapolation.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "qspline/error.hpp"

namespace qspline {

ExtrapolationResult extrapolate_limit(std::span<const double> nodes,
                                      std::span<const Biquaternion> partial_sums, const TailModel& model) {
  if (nodes.size() != partial_sums.size()) throw PreconditionError("nodes and sums differ in length");
  const bool oscillating = model.log_frequency != 0.0;
  const int per_component = model.orders * (oscillating ? 2 : 1);
  const int cols = 1 + static_cast<int>(model.components.size()) * per_component;
  const int rows = static_cast<int>(nodes.size());
  if (rows < cols) throw PreconditionError("too few nodes for the tail model");

  Eigen::MatrixXcd design(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const double n = nodes[r];
    const double ln = std::log(n);
    design(r, 0) = 1.0;
    int c = 1;
    for (const TailComponent& comp : model.components) {
      const Complex phase = std::polar(std::pow(std::abs(comp.ratio), n), n * std::arg(comp.ratio));
      for (int m = 0; m < model.orders; ++m) {
        const Complex base = phase * std::pow(n, -comp.exponent - m);
        if (oscillating) {
          design(r, c++) = base * std::cos(model.log_frequency * ln);
          design(r, c++) = base * std::sin(model.log_frequency * ln);
        } else {
          design(r, c++) = base;
        }
      }
    }
  }
  // Column equilibration keeps the QR well scaled when the N^{-m} columns
  // span many orders of magnitude.
  Eigen::VectorXd scale(cols);
  for (int c = 0; c < cols; ++c) {
    const double s = design.col(c).cwiseAbs().maxCoeff();
    scale(c) = s > 0.0 ? s : 1.0;
    design.col(c) /= scale(c);
  }

  Eigen::MatrixXcd rhs(rows, 4);
  for (int r = 0; r < rows; ++r) {
    rhs(r, 0) = partial_sums[r].a;
    rhs(r, 1) = partial_sums[r].v1;
    rhs(r, 2) = partial_sums[r].v2;
    rhs(r, 3) = partial_sums[r].v3;
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(design);
  const Eigen::MatrixXcd coeffs = qr.solve(rhs);
  const Eigen::MatrixXcd residual = design * coeffs - rhs;

  ExtrapolationResult out;
  const double s0 = scale(0);
  out.limit = {coeffs(0, 0) / s0, coeffs(0, 1) / s0, coeffs(0, 2) / s0, coeffs(0, 3) / s0};
  out.fit_residual = residual.cwiseAbs().maxCoeff();
  return out;
}

}  // namespace qspline
