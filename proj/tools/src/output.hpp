#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace qrmt::cli {

/// Shortest decimal form that reads back to the same double; "inf",
/// "-inf" and "nan" for non-finite values.
std::string format_number(double v);

struct CsvTable {
  std::vector<std::string> comments;  // written as "# ..." lines
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string render_csv(const CsvTable& t);

/// Writes `text` to `path`, creating parent directories; throws Io on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
  bool markers = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<PlotSeries> series;
};

/// Minimal SVG line plot; points with non-positive coordinates are dropped
/// on log axes.
std::string render_svg(const PlotSpec& spec);

}  // namespace qrmt::cli
