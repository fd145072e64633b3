#pragma once

#include <filesystem>
#include <string>
#include <vector>


namespace qspline::cli {

// Writes the whole file at once; throws IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& content);

// Row of numbers joined with commas in %.15g, LF-terminated.
std::string csv_row(const std::vector<double>& values);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Line plot with one polyline per series.
std::string svg_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                     const std::vector<Series>& series);

}  // namespace qspline::cli
