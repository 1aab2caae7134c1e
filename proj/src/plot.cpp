#include "dephase/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace dephase::plot {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Chart& chart, int width, int height) {
    constexpr double margin_left = 60, margin_right = 150, margin_top = 30, margin_bottom = 45;
    const double plot_w = width - margin_left - margin_right;
    const double plot_h = height - margin_top - margin_bottom;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : chart.series) {
        for (double x : s.x) xmin = std::min(xmin, x), xmax = std::max(xmax, x);
        for (double y : s.y) ymin = std::min(ymin, y), ymax = std::max(ymax, y);
    }
    if (!(xmax > xmin)) xmin = 0.0, xmax = 1.0;
    ymin = std::min(ymin, 0.0);
    if (!(ymax > ymin)) ymax = ymin + 1.0;

    auto px = [&](double x) { return margin_left + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return margin_top + (1.0 - (y - ymin) / (ymax - ymin)) * plot_h; };

    std::string svg = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" font-family=\"sans-serif\" "
        "font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        width, height);
    svg += fmt::format("<text x=\"{}\" y=\"18\" text-anchor=\"middle\">{}</text>\n", margin_left + plot_w / 2,
                       escape(chart.title));
    svg += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
                       margin_left, margin_top, plot_w, plot_h);

    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4.0;
        const double yv = ymin + (ymax - ymin) * i / 4.0;
        svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.4g}</text>\n", px(xv),
                           margin_top + plot_h + 16, xv);
        svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{:.3g}</text>\n", margin_left - 5,
                           py(yv) + 4, yv);
    }
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", margin_left + plot_w / 2,
                       height - 8, escape(chart.x_label));
    svg += fmt::format("<text x=\"14\" y=\"{:.1f}\" transform=\"rotate(-90 14 {:.1f})\" text-anchor=\"middle\">{}</text>\n",
                       margin_top + plot_h / 2, margin_top + plot_h / 2, escape(chart.y_label));

    for (std::size_t k = 0; k < chart.series.size(); ++k) {
        const auto& s = chart.series[k];
        std::string points;
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i)
            points += fmt::format("{:.2f},{:.2f} ", px(s.x[i]), py(s.y[i]));
        svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{} points=\"{}\"/>\n", s.color,
                           s.dash.empty() ? "" : fmt::format(" stroke-dasharray=\"{}\"", s.dash), points);
        const double ly = margin_top + 14.0 * (k + 1);
        svg += fmt::format("<line x1=\"{0}\" x2=\"{1}\" y1=\"{2}\" y2=\"{2}\" stroke=\"{3}\"{4}/>\n",
                           margin_left + plot_w + 8, margin_left + plot_w + 28, ly - 4, s.color,
                           s.dash.empty() ? "" : fmt::format(" stroke-dasharray=\"{}\"", s.dash));
        svg += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", margin_left + plot_w + 32, ly, escape(s.label));
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace dephase::plot
