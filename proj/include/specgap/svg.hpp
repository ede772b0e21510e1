#pragma once

#include <string>
#include <utility>
#include <vector>

namespace specgap {

struct PlotSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
  bool markers = false;  // draw point markers in addition to the polyline
};

struct PlotOptions {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  bool logx = false;
  bool logy = false;
  int width = 880;
  int height = 560;
};

// Self-contained SVG line plot: axes, ticks, legend, one polyline per series.
// No external references of any kind.
void write_line_plot(const std::string& path, const std::vector<PlotSeries>& series,
                     const PlotOptions& opts);

}  // namespace specgap
