// plot.hpp: minimal SVG line charts.

#pragma once

#include <string>
#include <vector>

namespace dephase::plot {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color;
    std::string dash;  // stroke-dasharray, empty for solid
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

std::string render_svg(const Chart& chart, int width = 640, int height = 400);

}  // namespace dephase::plot
