#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trefftz::cli {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

/// Line chart with a logarithmic y axis. Points with y <= 0 or non-finite
/// coordinates are skipped. Throws std::runtime_error when nothing is left
/// to draw.
void write_svg_logy(std::ostream& out, const PlotSpec& spec);

}  // namespace trefftz::cli
