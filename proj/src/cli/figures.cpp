#include "figures.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "cli.hpp"
#include "order_literal.hpp"
#include "output.hpp"
#include "qspline/time_domain.hpp"

namespace qspline::cli {

Quaternion figure_order(int m) { return {3.0, m / 5.0, -3.0 * m / 10.0, 2.0 * m / 5.0}; }

const std::vector<Quaternion>& figure_pair() {
  static const std::vector<Quaternion> pair = {{3, -1, 1, 2}, {3, 1, 2, 2}};
  return pair;
}

double plane_residual(const std::vector<Quaternion>& samples) {
  Eigen::Matrix3d scatter = Eigen::Matrix3d::Zero();
  for (const auto& s : samples) {
    const Eigen::Vector3d x(s.v1, s.v2, s.v3);
    scatter += x * x.transpose();
  }
  if (scatter.isZero(0.0)) return 0.0;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(scatter);
  const Eigen::Vector3d n = eig.eigenvectors().col(0);
  double worst = 0.0;
  for (const auto& s : samples) worst = std::max(worst, std::abs(n.dot(Eigen::Vector3d(s.v1, s.v2, s.v3))));
  return worst;
}

FigureReport write_figures(const std::filesystem::path& dir, bool svg, int threads) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  FigureReport report;
  std::vector<SampledField> family;
  for (int m = 0; m < kFigureFamily; ++m)
    family.push_back(bspline_time_grid(SplineOrder(figure_order(m), 1.0), 0.0, kFigureStep, kFigurePoints, threads));
  std::vector<SampledField> pair;
  for (const auto& q : figure_pair())
    pair.push_back(bspline_time_grid(SplineOrder(q, 1.0), 0.0, kFigureStep, kFigurePoints, threads));

  std::string fig1 = "m,t,scalar,modulus\n", fig2 = "m,t,v1,v2,v3\n", fig3 = "m,t,scalar,v1,v2\n";
  for (int m = 0; m < kFigureFamily; ++m) {
    const SampledField& f = family[m];
    double peak = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Quaternion& b = f.samples[i];
      const double t = f.abscissa(i);
      peak = std::max(peak, abs(b));
      fig1 += csv_row({double(m), t, b.a, abs(b)});
      fig2 += csv_row({double(m), t, b.v1, b.v2, b.v3});
      fig3 += csv_row({double(m), t, b.a, b.v1, b.v2});
    }
    report.max_modulus.push_back(peak);
    report.planarity_residual = std::max(report.planarity_residual, plane_residual(f.samples));
  }
  std::string fig4 = "series,t,v1,v2\n";
  for (std::size_t k = 0; k < pair.size(); ++k)
    for (std::size_t i = 0; i < pair[k].size(); ++i)
      fig4 += csv_row({double(k + 1), pair[k].abscissa(i), pair[k].samples[i].v1, pair[k].samples[i].v2});

  report.amplitude_monotone = true;
  for (int m = 1; m < kFigureFamily; ++m)
    if (!(report.max_modulus[m] > report.max_modulus[m - 1])) report.amplitude_monotone = false;
  report.zero_order_real = std::all_of(family[0].samples.begin(), family[0].samples.end(),
                                       [](const Quaternion& b) { return b.v1 == 0 && b.v2 == 0 && b.v3 == 0; });

  const auto emit = [&](const std::string& name, const std::string& content) {
    write_file(dir / name, content);
    report.outputs.push_back((dir / name).string());
  };
  emit("fig1_modulus_scalar.csv", fig1);
  emit("fig2_vector_parts.csv", fig2);
  emit("fig3_phase.csv", fig3);
  emit("fig4_pair_v1_v2.csv", fig4);

  if (svg) {
    const auto family_plot = [&](auto x_of, auto y_of) {
      std::vector<Series> out;
      for (int m = 0; m < kFigureFamily; ++m) {
        Series s{"m = " + std::to_string(m), {}, {}};
        for (std::size_t i = 0; i < family[m].size(); ++i) {
          s.x.push_back(x_of(family[m], i));
          s.y.push_back(y_of(family[m].samples[i]));
        }
        out.push_back(std::move(s));
      }
      return out;
    };
    const auto t_of = [](const SampledField& f, std::size_t i) { return f.abscissa(i); };
    emit("fig1_modulus.svg", svg_plot("|B_q(t)|", "t", "modulus", family_plot(t_of, [](auto& b) { return abs(b); })));
    emit("fig1_scalar.svg", svg_plot("Sc B_q(t)", "t", "scalar", family_plot(t_of, [](auto& b) { return b.a; })));
    for (int k = 1; k <= 3; ++k) {
      const std::string name = "v" + std::to_string(k);
      emit("fig2_" + name + ".svg",
           svg_plot(name + " of B_q(t)", "t", name, family_plot(t_of, [k](auto& b) { return b[k]; })));
    }
    const auto v1_of = [](const SampledField& f, std::size_t i) { return f.samples[i].v1; };
    const auto a_of = [](const SampledField& f, std::size_t i) { return f.samples[i].a; };
    emit("fig3_scalar_v1.svg", svg_plot("scalar vs v1", "scalar", "v1", family_plot(a_of, [](auto& b) { return b.v1; })));
    emit("fig3_v1_v2.svg", svg_plot("v1 vs v2", "v1", "v2", family_plot(v1_of, [](auto& b) { return b.v2; })));
    std::vector<Series> p;
    for (std::size_t k = 0; k < pair.size(); ++k) {
      Series s{format_order(figure_pair()[k]), {}, {}};
      for (const auto& b : pair[k].samples) {
        s.x.push_back(b.v1);
        s.y.push_back(b.v2);
      }
      p.push_back(std::move(s));
    }
    emit("fig4_v1_v2.svg", svg_plot("v1 vs v2", "v1", "v2", p));
  }
  return report;
}

}  // namespace qspline::cli
