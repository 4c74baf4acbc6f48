#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fkpp {

// One polyline of (x, y) points.
struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct PlotStyle {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    int width = 720;
    int height = 480;
};

// Dependency-free SVG line plot, byte-identical for identical inputs.
// Throws std::invalid_argument when no series has at least 2 points.
std::string render_line_plot(const std::vector<PlotSeries>& series, const PlotStyle& style);

} // namespace fkpp
