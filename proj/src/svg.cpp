#include "fkpp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fkpp {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

std::string render_line_plot(const std::vector<PlotSeries>& series, const PlotStyle& style) {
    bool drawable = false;
    for (const auto& s : series)
        if (s.points.size() >= 2) drawable = true;
    if (!drawable) throw std::invalid_argument("render_line_plot: need a series with >= 2 points");

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const int ml = 64, mr = 16, mt = 36, mb = 48;
    const double pw = style.width - ml - mr, ph = style.height - mt - mb;
    auto px = [&](double x) { return ml + pw * (x - xmin) / (xmax - xmin); };
    auto py = [&](double y) { return mt + ph * (ymax - y) / (ymax - ymin); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width
        << "\" height=\"" << style.height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << style.width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"14\">" << style.title << "</text>\n";

    // Axes with 5 ticks per side.
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4.0;
        const double yv = ymin + (ymax - ymin) * i / 4.0;
        out << "<text x=\"" << fmt(px(xv)) << "\" y=\"" << mt + ph + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt(xv) << "</text>\n";
        out << "<text x=\"" << ml - 6 << "\" y=\"" << fmt(py(yv) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt(yv) << "</text>\n";
    }
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << style.height - 10
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << style.xlabel << "</text>\n";
    out << "<text x=\"14\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
           "transform=\"rotate(-90 14 " << mt + ph / 2 << ")\">" << style.ylabel << "</text>\n";

    std::size_t ci = 0;
    for (const auto& s : series) {
        if (s.points.size() < 2) continue;
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[ci % 8]
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points) out << fmt(px(x)) << ',' << fmt(py(y)) << ' ';
        out << "\"/>\n";
        if (!s.label.empty())
            out << "<text x=\"" << ml + pw - 8 << "\" y=\"" << mt + 16 + 16 * static_cast<int>(ci)
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\""
                << kPalette[ci % 8] << "\">" << s.label << "</text>\n";
        ++ci;
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace fkpp
