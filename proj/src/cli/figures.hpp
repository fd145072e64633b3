#pragma once

// Datasets for the figures: B_q on t in [0, 6] for the order families
//   q_m = 3 + m/5 e1 - 3m/10 e2 + 2m/5 e3, m = 0..4
// and the pair q1 = 3 - e1 + e2 + 2e3, q2 = 3 + e1 + 2e2 + 2e3.

#include <filesystem>
#include <string>
#include <vector>

#include "qspline/quaternion.hpp"

namespace qspline::cli {

inline constexpr int kFigureFamily = 5;
inline constexpr double kFigureStep = 0.05;
inline constexpr int kFigurePoints = 121;

Quaternion figure_order(int m);
const std::vector<Quaternion>& figure_pair();

// max |n . x| over the vector parts x, with n the normal of the
// least-squares plane through the origin.
double plane_residual(const std::vector<Quaternion>& samples);

struct FigureReport {
  std::vector<std::string> outputs;
  std::vector<double> max_modulus;    // per m
  double planarity_residual = 0.0;    // max over m
  bool amplitude_monotone = false;    // max modulus strictly increasing in m
  bool zero_order_real = false;       // m = 0 vector columns identically zero
};

// Writes fig1..fig4 CSV files (and SVG plots when requested) into dir.
FigureReport write_figures(const std::filesystem::path& dir, bool svg, int threads);

}  // namespace qspline::cli
