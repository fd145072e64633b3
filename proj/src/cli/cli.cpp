#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <vector>

#include "CLI11.hpp"
#include "figures.hpp"
#include "json.hpp"
#include "order_literal.hpp"
#include "output.hpp"
#include "qspline/config.hpp"
#include "qspline/error.hpp"
#include "qspline/fourier.hpp"
#include "qspline/gamma.hpp"
#include "qspline/oracles.hpp"
#include "qspline/parallel.hpp"
#include "qspline/time_domain.hpp"
#include "qspline/verify.hpp"

namespace qspline::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::int64_t kGaussTerms = 1000000;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Json config_json(const EvalConfig& c) {
  Json j;
  j["series_tol"] = c.series_tol;
  j["quad_points"] = c.quad_points;
  j["freq_cutoff"] = c.freq_cutoff ? Json(*c.freq_cutoff) : Json(nullptr);
  j["lattice_K"] = c.lattice_K;
  j["threads"] = c.threads;
  return j;
}

Json grid_json(const char* axis, const Grid& g) {
  return {{"axis", axis}, {"start", g.start}, {"step", g.step}, {"count", g.count}};
}

void write_manifest(const std::filesystem::path& path, const std::string& command, const std::vector<Quaternion>& orders,
                    const Json& grid, const EvalConfig& config, const std::vector<std::string>& outputs,
                    double seconds) {
  Json m;
  m["command"] = command;
  m["orders"] = Json::array();
  for (const auto& q : orders) m["orders"].push_back(format_order(q));
  m["grid"] = grid;
  m["config"] = config_json(config);
  m["outputs"] = outputs;
  m["timing"] = {{"seconds", seconds}};
  write_file(path, m.dump(2) + "\n");
}

struct EvalArgs {
  std::string order;
  std::string domain = "time";
  std::string grid;
  std::string out;
};

int cmd_eval(const EvalArgs& args, int threads, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const Quaternion q = parse_order(args.order);
  const Grid grid = parse_grid(args.grid);
  EvalConfig config;
  config.threads = threads;

  std::string csv = "t_or_xi,scalar,v1,v2,v3,modulus";
  if (args.domain == "time") {
    const SplineOrder order(q, 1.0);
    const SampledField f = bspline_time_grid(order, grid.start, grid.step, grid.count, threads);
    csv += '\n';
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Quaternion& b = f.samples[i];
      csv += csv_row({f.abscissa(i), b.a, b.v1, b.v2, b.v3, abs(b)});
    }
    // Nodes where the alternating sum cancels to exactly zero (support ends of
    // integer orders) are not reported.
    const BsplineEvaluator eval(order, f.abscissa(f.size() - 1));
    int flagged = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      EvalReport report;
      if (eval(f.abscissa(i), &report) == Quaternion{} || !report.ill_conditioned) continue;
      ++flagged;
      worst = std::max(worst, report.amplification);
    }
    if (flagged > 0) {
      err << "warning: " << flagged << " nodes lose accuracy in the alternating sum (amplification up to "
          << format_number(worst) << ")\n";
    }
  } else {
    const SplineOrder order(q, 0.5);
    std::vector<Biquaternion> values(static_cast<std::size_t>(grid.count));
    parallel_for(values.size(), threads, [&](std::size_t i) { values[i] = bspline_hat(order, grid.at(int(i))); });
    csv += ",scalar_im,v1_im,v2_im,v3_im\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      const Biquaternion& b = values[i];
      csv += csv_row({grid.at(int(i)), b.a.real(), b.v1.real(), b.v2.real(), b.v3.real(), abs(b), b.a.imag(),
                      b.v1.imag(), b.v2.imag(), b.v3.imag()});
    }
  }

  if (args.out.empty()) {
    out << csv;
    return 0;
  }
  write_file(args.out, csv);
  write_manifest(args.out + ".manifest.json", "eval", {q}, grid_json(args.domain == "time" ? "t" : "xi", grid),
                 config, {args.out}, seconds_since(start));
  return 0;
}

int cmd_figures(const std::string& dir, bool svg, int threads, std::ostream& out) {
  const auto start = Clock::now();
  const FigureReport report = write_figures(dir, svg, threads);
  char line[160];
  std::snprintf(line, sizeof line, "%-40s %-12.3e %s\n", "fig3 planarity residual (< 1e-9)", report.planarity_residual,
                report.planarity_residual < 1e-9 ? "PASS" : "FAIL");
  out << line;
  out << "max modulus by m:";
  for (const double m : report.max_modulus) out << ' ' << format_number(m);
  out << "\n";
  std::snprintf(line, sizeof line, "%-40s %-12s %s\n", "amplitude increases with m", "",
                report.amplitude_monotone ? "PASS" : "FAIL");
  out << line;
  std::snprintf(line, sizeof line, "%-40s %-12s %s\n", "m = 0 vector parts identically zero", "",
                report.zero_order_real ? "PASS" : "FAIL");
  out << line;

  std::vector<Quaternion> orders;
  for (int m = 0; m < kFigureFamily; ++m) orders.push_back(figure_order(m));
  for (const auto& q : figure_pair()) orders.push_back(q);
  EvalConfig config;
  config.threads = threads;
  write_manifest(std::filesystem::path(dir) / "figures.manifest.json", "figures", orders,
                 grid_json("t", {0.0, kFigureStep, kFigurePoints}), config, report.outputs, seconds_since(start));
  const bool ok = report.planarity_residual < 1e-9 && report.amplitude_monotone && report.zero_order_real;
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& profile, int threads, std::ostream& out) {
  const auto results = run_suite(suite, profile == "strict" ? TolProfile::strict : TolProfile::fast, threads);
  char line[256];
  std::snprintf(line, sizeof line, "%-9s %-52s %-12s %-13s %-6s %s\n", "suite", "check", "measured", "tolerance",
                "result", "seconds");
  out << line;
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    const std::string tol = std::string(r.lower_bound ? "> " : "<= ") + format_number(r.tolerance);
    std::snprintf(line, sizeof line, "%-9s %-52s %-12.4e %-13s %-6s %.2f\n", r.suite.c_str(), r.name.c_str(),
                  r.measured, tol.c_str(), r.passed ? "PASS" : "FAIL", r.seconds);
    out << line;
    if (!r.error.empty()) out << "          error: " << r.error << "\n";
  }
  out << (ok ? "all checks passed\n" : "some checks FAILED\n");
  return ok ? 0 : 1;
}

Quaternion gamma_by(const std::string& method, const Quaternion& q) {
  if (method == "quadrature") return gamma_by_quadrature(q).value;
  if (method == "gauss_limit") return gamma_gauss_limit_extrapolated(q, kGaussTerms);
  return gamma_quat(q).value;
}

int cmd_gamma(const std::string& literal, const std::string& method, bool cross_check, std::ostream& out) {
  const Quaternion q = parse_order(literal);
  if (!cross_check) {
    out << format_value(gamma_by(method, q)) << "\n";
    return 0;
  }
  std::vector<std::pair<std::string, Quaternion>> values;
  for (const char* m : {"complexified", "quadrature", "gauss_limit"}) values.emplace_back(m, gamma_by(m, q));
  double deviation = 0.0;
  for (const auto& [name, v] : values) {
    out << name << ": " << format_value(v) << "\n";
    for (const auto& [other, w] : values) deviation = std::max(deviation, abs(v - w) / std::max(abs(w), 1e-300));
  }
  out << "max relative deviation: " << format_number(deviation) << "\n";
  return 0;
}

}  // namespace

Grid parse_grid(const std::string& text) {
  Grid g;
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
    throw PreconditionError("grid must be start:step:count, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, first), b = text.substr(first + 1, second - first - 1),
                      c = text.substr(second + 1);
    g.start = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    g.step = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    g.count = std::stoi(c, &used);
    if (used != c.size()) throw std::invalid_argument(c);
  } catch (const std::logic_error&) {
    throw PreconditionError("grid must be start:step:count, got '" + text + "'");
  }
  if (!std::isfinite(g.start) || !(g.step > 0.0) || !std::isfinite(g.step))
    throw PreconditionError("grid step must be positive");
  if (g.count < 1) throw PreconditionError("grid count must be at least 1");
  return g;
}

int threads_from_env() {
  const char* value = std::getenv("QSPLINE_THREADS");
  if (!value || !*value) return resolve_threads(0);
  try {
    std::size_t used = 0;
    const int n = std::stoi(value, &used);
    if (used == std::string(value).size() && n >= 0) return resolve_threads(n);
  } catch (const std::logic_error&) {
  }
  throw PreconditionError(std::string("QSPLINE_THREADS must be a non-negative integer, got '") + value + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternionic B-splines: evaluation, figure data and verification", "qspline"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Sample B_q in time or its Fourier transform");
  eval_cmd->add_option("--q", eval.order, "Order literal, e.g. 3+0.2e1-0.3e2+0.4e3")->required();
  eval_cmd->add_option("--domain", eval.domain, "time or fourier")->check(CLI::IsMember({"time", "fourier"}));
  eval_cmd->add_option("--grid", eval.grid, "start:step:count")->required();
  eval_cmd->add_option("--out", eval.out, "CSV path (stdout when omitted)");

  std::string fig_dir;
  bool fig_svg = false;
  auto* fig_cmd = app.add_subcommand("figures", "Write the figure datasets");
  fig_cmd->add_option("--out", fig_dir, "Output directory")->required();
  fig_cmd->add_flag("--svg", fig_svg, "Also write SVG line plots");

  std::string suite = "all", profile = "fast";
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", suite, "algebra, gamma, fourier, time, gaussian or all")
      ->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--tol-profile", profile, "fast or strict")->check(CLI::IsMember({"fast", "strict"}));

  std::string gamma_order, method = "complexified";
  bool cross_check = false;
  auto* gamma_cmd = app.add_subcommand("gamma", "Evaluate Gamma(q)");
  gamma_cmd->add_option("--q", gamma_order, "Order literal")->required();
  gamma_cmd->add_option("--method", method, "complexified, quadrature or gauss_limit")
      ->check(CLI::IsMember({"complexified", "quadrature", "gauss_limit"}));
  gamma_cmd->add_flag("--cross-check", cross_check, "Compare all three methods");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    const int threads = threads_from_env();
    if (*eval_cmd) return cmd_eval(eval, threads, out, err);
    if (*fig_cmd) return cmd_figures(fig_dir, fig_svg, threads, out);
    if (*verify_cmd) return cmd_verify(suite, profile, threads, out);
    return cmd_gamma(gamma_order, method, cross_check, out);
  } catch (const PoleError& e) {
    err << "error: pole of Gamma: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qspline::cli
