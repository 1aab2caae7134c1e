#include "dephase/experiments.hpp"

#include <cmath>
#include <fmt/format.h>
#include <sstream>

#include "dephase/limits.hpp"
#include "dephase/log.hpp"

#include <spdlog/spdlog.h>

namespace dephase {

void write_csv(std::ostream& out, std::span<const CorrelationSample> rows) {
    out << csv_header << '\n';
    for (const auto& r : rows)
        out << fmt::format("{:.15g},{:.15g},{:.15g},{:.15g},{:.15g},{:.15g},{:.15g}\n", r.t, r.concurrence, r.discord,
                           r.mutual_info, r.classical_corr, r.absF1, r.absF2);
}

std::string to_csv(std::span<const CorrelationSample> rows) {
    std::ostringstream out;
    write_csv(out, rows);
    return out.str();
}

std::vector<CorrelationSample> run_timeseries(const RunConfig& cfg) {
    cfg.validate();
    const auto grid = uniform_grid(cfg.t_max, cfg.steps);
    logger()->info("evolving state={} engine={} over [0, {}] ({} points)", to_string(cfg.initial.kind),
                   to_string(cfg.engine), cfg.t_max, cfg.steps);
    return correlation_timeseries(cfg.model, cfg.initial.state(), cfg.engine, grid);
}

CriticalTimes critical_times(const ModelParams& params, double c3) {
    params.validate();
    CriticalTimes ct{};
    ct.same_position = params.same_position();
    if (ct.same_position) {
        ct.sudden_death = sudden_death_time(params, c3);
        ct.discord_change = discord_sudden_change_time(params, c3);
    } else {
        ct.second_period_change = second_period_change_time(params, c3);
    }
    return ct;
}

std::string format_critical_times(const CriticalTimes& ct) {
    auto show = [](bool applies, const std::optional<double>& t) -> std::string {
        if (!applies) return "n/a";
        return t ? fmt::format("{:.15g}", *t) : "none";
    };
    return fmt::format("geometry={}\nsudden_death={}\ndiscord_change={}\nsecond_period_change={}\n",
                       ct.same_position ? "same" : "distinct", show(ct.same_position, ct.sudden_death),
                       show(ct.same_position, ct.discord_change),
                       show(!ct.same_position, ct.second_period_change));
}

namespace {

void accumulate(FactorDeviation& dev, double exact_abs, double limit_abs) {
    const double le = std::log(limit_abs);
    const double diff = std::abs(std::log(exact_abs) - le);
    if (le == 0.0) {
        dev.max_absolute = std::max(dev.max_absolute, diff);
        ++dev.absolute_points;
    } else {
        dev.max_relative = std::max(dev.max_relative, diff / std::abs(le));
        ++dev.relative_points;
    }
}

}  // namespace

EngineComparison compare_engines(const RunConfig& cfg) {
    cfg.validate();
    const ModelParams& m = cfg.model;
    EngineComparison cmp;
    for (double t : uniform_grid(cfg.t_max, cfg.steps)) {
        accumulate(cmp.single, std::abs(exact_f_single(m, t)), limit_f_single(m, t));
        const DecoherencePair exact = exact_f_pair(m, t);
        const DecoherencePair limit = m.same_position() ? limit_f_pair_same(m, t) : limit_f_pair_distinct(m, t);
        accumulate(cmp.f1, std::abs(exact.f1), std::abs(limit.f1));
        accumulate(cmp.f2, std::abs(exact.f2), std::abs(limit.f2));
    }
    return cmp;
}

std::string format_comparison(const EngineComparison& cmp) {
    std::string out = "factor,max_rel_log_dev,rel_points,max_abs_log_dev,abs_points\n";
    auto row = [&out](std::string_view name, const FactorDeviation& d) {
        out += fmt::format("{},{:.6e},{},{:.6e},{}\n", name, d.max_relative, d.relative_points, d.max_absolute,
                           d.absolute_points);
    };
    row("f", cmp.single);
    row("f1", cmp.f1);
    row("f2", cmp.f2);
    return out;
}

}  // namespace dephase
