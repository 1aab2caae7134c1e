#include "dephase/figures.hpp"

#include <array>
#include <fmt/format.h>
#include <sstream>

#include "dephase/experiments.hpp"
#include "dephase/limits.hpp"
#include "dephase/plot.hpp"

namespace dephase {

namespace {

constexpr std::array<std::string_view, 7> figure_names{"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};

bool distinct_geometry(FigureId id) { return id == FigureId::fig5 || id == FigureId::fig6 || id == FigureId::fig7; }

RunConfig with_state(RunConfig cfg, StateKind kind, double c3 = 0.0) {
    cfg.initial = InitialStateSpec{kind, 0.0, 0.0, kind == StateKind::mixture ? c3 : 0.0, 1};
    return cfg;
}

Dataset series(std::string name, const RunConfig& cfg) {
    return {std::move(name), to_csv(run_timeseries(cfg))};
}

Dataset surface(std::string name, const RunConfig& base) {
    std::string csv = "c3,t,C,D,I,J,absF1,absF2\n";
    for (double c3 : figure_c3_grid()) {
        for (const auto& r : run_timeseries(with_state(base, StateKind::mixture, c3)))
            csv += fmt::format("{},{:.15g},{:.15g},{:.15g},{:.15g},{:.15g},{:.15g},{:.15g}\n", c3, r.t, r.concurrence,
                               r.discord, r.mutual_info, r.classical_corr, r.absF1, r.absF2);
    }
    return {std::move(name), std::move(csv)};
}

Dataset endpoints() {
    std::string csv = "c3,C_0,C_inf,D_0,D_inf\n";
    for (double c3 : figure_c3_grid()) {
        const auto a = asymptotic_correlations(c3);
        csv += fmt::format("{},{:.15g},{:.15g},{:.15g},{:.15g}\n", c3, a.C_0, a.C_inf, a.D_0, a.D_inf);
    }
    return {"fig2", std::move(csv)};
}

std::vector<Dataset> curves(FigureId id, std::initializer_list<double> c3s) {
    std::vector<Dataset> out;
    const RunConfig base = figure_base_config(id);
    for (double c3 : c3s)
        out.push_back(series(fmt::format("{}_c3_{}", to_string(id), c3), with_state(base, StateKind::mixture, c3)));
    return out;
}

// Column-wise view of a CSV dataset.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    const std::vector<double>& col(std::string_view name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return columns[i];
        throw std::out_of_range(fmt::format("no column {}", name));
    }
};

Table parse_table(const std::string& csv) {
    Table t;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    for (std::istringstream h(line); std::getline(h, line, ',');) t.header.push_back(line);
    t.columns.resize(t.header.size());
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string cell;
        for (std::size_t i = 0; i < t.header.size() && std::getline(row, cell, ','); ++i)
            t.columns[i].push_back(std::stod(cell));
    }
    return t;
}

constexpr std::array<const char*, 4> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

std::string time_chart(std::string title, const std::vector<std::pair<std::string, Table>>& tables,
                       std::initializer_list<std::string_view> columns) {
    plot::Chart chart{std::move(title), "t / T", "C (solid), D in bits (dashed)", {}};
    std::size_t k = 0;
    for (const auto& [label, table] : tables) {
        for (auto column : columns) {
            chart.series.push_back({fmt::format("{} {}", label, column), table.col("t"), table.col(column),
                                    palette[k % palette.size()], column == "D" ? "6,4" : ""});
        }
        ++k;
    }
    return plot::render_svg(chart);
}

std::vector<Dataset> render_surface(FigureId id, const Table& t) {
    const auto grid = figure_c3_grid();
    const std::array<double, 4> picks{grid[10], grid[30], grid[50], grid[70]};
    std::vector<Dataset> out;
    for (std::string_view quantity : {"C", "D"}) {
        plot::Chart chart{fmt::format("{}: {} vs t", to_string(id), quantity), "t / T", std::string(quantity), {}};
        for (std::size_t k = 0; k < picks.size(); ++k) {
            plot::Series s{fmt::format("c3 = {:.3g}", picks[k]), {}, {}, palette[k], ""};
            const auto& c3 = t.col("c3");
            for (std::size_t i = 0; i < c3.size(); ++i) {
                if (c3[i] != picks[k]) continue;
                s.x.push_back(t.col("t")[i]);
                s.y.push_back(t.col(quantity)[i]);
            }
            chart.series.push_back(std::move(s));
        }
        out.push_back({fmt::format("{}_{}", to_string(id), quantity), plot::render_svg(chart)});
    }
    return out;
}

}  // namespace

std::optional<FigureId> parse_figure_id(std::string_view name) {
    for (std::size_t i = 0; i < figure_names.size(); ++i)
        if (figure_names[i] == name) return static_cast<FigureId>(i);
    return std::nullopt;
}

std::string_view to_string(FigureId id) { return figure_names[static_cast<std::size_t>(id)]; }

RunConfig figure_base_config(FigureId id) {
    RunConfig cfg;
    ModelParams& m = cfg.model;
    m.n_spins = 1001;
    m.coupling_angle = std::asin(std::sqrt(0.005));
    m.x1 = 100.0;
    m.spacing = 1.0;
    m.velocity = 1.0;
    m.xA = 0.0;
    m.xB = distinct_geometry(id) ? -200.0 : 0.0;
    cfg.engine = Engine::limit;
    cfg.t_max = 1300.0;
    cfg.steps = 1301;
    return cfg;
}

std::vector<double> figure_c3_grid() {
    std::vector<double> grid;
    grid.reserve(81);
    for (int k = -40; k <= 40; ++k) grid.push_back(k * 0.024);
    return grid;
}

std::vector<Dataset> reproduce_figure(FigureId id) {
    const RunConfig base = figure_base_config(id);
    switch (id) {
        case FigureId::fig1: return {series("fig1", with_state(base, StateKind::phi_plus))};
        case FigureId::fig2: return {endpoints()};
        case FigureId::fig3: return {surface("fig3", base)};
        case FigureId::fig4: return curves(id, {-0.6, 0.5, 0.7});
        case FigureId::fig5:
            return {series("fig5_phi", with_state(base, StateKind::phi_plus)),
                    series("fig5_psi", with_state(base, StateKind::psi_plus))};
        case FigureId::fig6: return {surface("fig6", base)};
        case FigureId::fig7: return curves(id, {-0.8, -0.5, 0.2, 0.7});
    }
    return {};
}

std::vector<Dataset> render_figure(FigureId id, const std::vector<Dataset>& data) {
    std::vector<std::pair<std::string, Table>> tables;
    for (const auto& d : data) tables.emplace_back(d.name, parse_table(d.csv));

    const std::string name(to_string(id));
    switch (id) {
        case FigureId::fig2: {
            const Table& t = tables.front().second;
            plot::Chart chart{"fig2: t = 0 and t = inf", "c3", "C, D (bits)", {}};
            chart.series.push_back({"C(0)", t.col("c3"), t.col("C_0"), palette[0], ""});
            chart.series.push_back({"C(inf)", t.col("c3"), t.col("C_inf"), palette[0], "6,4"});
            chart.series.push_back({"D(0)", t.col("c3"), t.col("D_0"), palette[1], ""});
            chart.series.push_back({"D(inf)", t.col("c3"), t.col("D_inf"), palette[1], "6,4"});
            return {{name, plot::render_svg(chart)}};
        }
        case FigureId::fig3:
        case FigureId::fig6: return render_surface(id, tables.front().second);
        case FigureId::fig4:
        case FigureId::fig7: return {{name, time_chart(name + ": discord", tables, {"D"})}};
        case FigureId::fig1:
        case FigureId::fig5: return {{name, time_chart(name, tables, {"C", "D"})}};
    }
    return {};
}

}  // namespace dephase
