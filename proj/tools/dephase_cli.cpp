// dephase: command line front end.
//
//   dephase evolve --config run.cfg --out series.csv
//   dephase figure fig4 --out-dir figures [--plot]
//   dephase critical-times --config run.cfg --c3 0.5
//   dephase compare --config run.cfg
//
// Exit codes: 0 success, 1 runtime/configuration error, 2 usage/parse error.

#include <CLI11.hpp>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <iostream>

#include "dephase/errors.hpp"
#include "dephase/experiments.hpp"
#include "dephase/figures.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int exit_runtime = 1;
constexpr int exit_usage = 2;

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
    out << text;
    if (!out) throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
}

int cmd_evolve(const std::string& config_path, const std::string& out_path) {
    const auto cfg = dephase::load_config(config_path);
    const std::string target = out_path.empty() ? cfg.output : out_path;
    const auto rows = dephase::run_timeseries(cfg);
    if (target.empty() || target == "-") {
        dephase::write_csv(std::cout, rows);
    } else {
        write_file(target, dephase::to_csv(rows));
    }
    return 0;
}

int cmd_figure(const std::string& name, const std::string& out_dir, bool plot) {
    const auto id = dephase::parse_figure_id(name);
    if (!id) {
        std::cerr << fmt::format("error: unknown figure '{}' (expected fig1..fig7)\n", name);
        return exit_usage;
    }
    fs::create_directories(out_dir);
    const auto data = dephase::reproduce_figure(*id);
    for (const auto& d : data) write_file(fs::path(out_dir) / (d.name + ".csv"), d.csv);
    if (plot)
        for (const auto& svg : dephase::render_figure(*id, data))
            write_file(fs::path(out_dir) / (svg.name + ".svg"), svg.csv);
    return 0;
}

int cmd_critical(const std::string& config_path, double c3) {
    const auto cfg = dephase::load_config(config_path);
    std::cout << dephase::format_critical_times(dephase::critical_times(cfg.model, c3));
    return 0;
}

int cmd_compare(const std::string& config_path) {
    const auto cfg = dephase::load_config(config_path);
    std::cout << dephase::format_comparison(dephase::compare_engines(cfg));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decoherence of two qubits crossing a spin array: concurrence and quantum discord"};
    app.require_subcommand(1);

    std::string config_path, out_path, figure_name, out_dir = ".";
    bool plot = false;
    double c3 = 0.0;

    auto* evolve = app.add_subcommand("evolve", "write the correlation time series of a config as CSV");
    evolve->add_option("--config", config_path, "key=value config file")->required();
    evolve->add_option("--out", out_path, "output CSV (default: config 'out' key, else stdout)");

    auto* figure = app.add_subcommand("figure", "write the curve data of a reference figure");
    figure->add_option("id", figure_name, "fig1..fig7")->required();
    figure->add_option("--out-dir", out_dir, "output directory");
    figure->add_flag("--plot", plot, "also render SVG charts");

    auto* critical = app.add_subcommand("critical-times", "analytic critical times of the Bell mixture family");
    critical->add_option("--config", config_path, "key=value config file")->required();
    critical->add_option("--c3", c3, "mixture parameter c3")->required();

    auto* compare = app.add_subcommand("compare", "log-domain deviation of the exact engine from the limit");
    compare->add_option("--config", config_path, "key=value config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*evolve) return cmd_evolve(config_path, out_path);
        if (*figure) return cmd_figure(figure_name, out_dir, plot);
        if (*critical) return cmd_critical(config_path, c3);
        if (*compare) return cmd_compare(config_path);
    } catch (const dephase::ParseError& e) {
        std::cerr << fmt::format("error: {}: {}\n", config_path, e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << fmt::format("error: {}\n", e.what());
        return exit_runtime;
    }
    return exit_usage;
}
