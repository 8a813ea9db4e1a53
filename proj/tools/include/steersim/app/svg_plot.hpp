#pragma once

// Minimal SVG 1.1 line plot: frame, ticks, one polyline per series, legend.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace steersim::app {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;  // non-finite points break the polyline
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::optional<double> reference_y;  // dashed horizontal line, e.g. a witness bound
};

void write_svg(std::ostream& os, const PlotSpec& plot);

}  // namespace steersim::app
