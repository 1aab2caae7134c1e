// figures.hpp: curve data for the seven reference figures.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dephase/config.hpp"

namespace dephase {

enum class FigureId { fig1, fig2, fig3, fig4, fig5, fig6, fig7 };

std::optional<FigureId> parse_figure_id(std::string_view name);
std::string_view to_string(FigureId id);

// q = 0.005, N = 1001, x1 = 100, xN = 1100, v = 1, xA = 0; xB = 0 for
// figs. 1-4 and xB = -200 for figs. 5-7. Grid 0..1300 T in 1301 points.
RunConfig figure_base_config(FigureId id);

// c3 values used for the surface and c3-sweep figures.
std::vector<double> figure_c3_grid();

struct Dataset {
    std::string name;  // file stem, e.g. "fig4_c3_0.5"
    std::string csv;
};

std::vector<Dataset> reproduce_figure(FigureId id);

// SVG renderings of the datasets; never touches the CSV text.
std::vector<Dataset> render_figure(FigureId id, const std::vector<Dataset>& data);

}  // namespace dephase
