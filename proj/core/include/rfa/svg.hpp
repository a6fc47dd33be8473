#pragma once

#include <string>
#include <vector>

namespace rfa::svg {

struct Polyline {
  std::vector<double> xs;
  std::vector<double> ys;
  std::string color = "#000000";
  double width = 1.0;
};

struct Markers {
  std::vector<double> xs;
  std::vector<double> ys;
  std::string color = "#000000";
  double radius = 3.0;
};

/// Self-contained SVG line chart (fixed viewport, light axes, a title).
/// Data bounds come from the union of all series, padded 5%.
std::string chart(const std::string& title, const std::vector<Polyline>& lines,
                  const std::vector<Markers>& markers = {}, int width = 800,
                  int height = 600);

}  // namespace rfa::svg
