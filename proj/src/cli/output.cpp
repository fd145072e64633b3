#include "output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>

#include "cli.hpp"
#include "order_literal.hpp"

namespace qspline::cli {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << content;
  file.close();
  if (!file) throw IoError("failed writing " + path.string());
}

std::string csv_row(const std::vector<double>& values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) row += ',';
    row += format_number(values[i]);
  }
  row += '\n';
  return row;
}

std::string svg_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                     const std::vector<Series>& series) {
  constexpr double kWidth = 640, kHeight = 400, kMargin = 50;
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo, y_lo = x_lo, y_hi = -x_lo;
  for (const auto& s : series) {
    for (const double x : s.x) x_lo = std::min(x_lo, x), x_hi = std::max(x_hi, x);
    for (const double y : s.y) y_lo = std::min(y_lo, y), y_hi = std::max(y_hi, y);
  }
  if (!(x_hi > x_lo)) x_hi = x_lo + 1.0;
  if (!(y_hi > y_lo)) y_hi = y_lo + 1.0;
  const auto px = [&](double x) { return kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin); };
  const auto py = [&](double y) { return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin); };
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\">\n";
  char buf[256];
  std::snprintf(buf, sizeof buf, "<text x=\"320\" y=\"20\" text-anchor=\"middle\">%s</text>\n", title.c_str());
  svg += buf;
  std::snprintf(buf, sizeof buf, "<text x=\"320\" y=\"390\" text-anchor=\"middle\">%s</text>\n", x_label.c_str());
  svg += buf;
  std::snprintf(buf, sizeof buf, "<text x=\"12\" y=\"200\" transform=\"rotate(-90 12 200)\">%s</text>\n",
                y_label.c_str());
  svg += buf;
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += colors[k % 6];
    svg += "\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(s.x[i]), py(s.y[i]));
      svg += buf;
    }
    svg += "\"><title>" + s.label + "</title></polyline>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace qspline::cli
