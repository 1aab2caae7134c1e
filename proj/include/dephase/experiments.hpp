// experiments.hpp: drivers behind the CLI: CSV time series, critical times
// and exact-vs-limit comparison.

#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dephase/config.hpp"
#include "dephase/correlations.hpp"

namespace dephase {

inline constexpr std::string_view csv_header = "t,C,D,I,J,absF1,absF2";

// Rows formatted with 15 significant digits, '\n' line endings.
void write_csv(std::ostream& out, std::span<const CorrelationSample> rows);
std::string to_csv(std::span<const CorrelationSample> rows);

std::vector<CorrelationSample> run_timeseries(const RunConfig& cfg);

// Analytic critical times of the mixture family for the config's geometry.
// Entries that do not apply to the geometry (same vs distinct positions) are
// left unset and flagged as such.
struct CriticalTimes {
    bool same_position;
    std::optional<double> sudden_death;
    std::optional<double> discord_change;
    std::optional<double> second_period_change;
};

CriticalTimes critical_times(const ModelParams& params, double c3);
std::string format_critical_times(const CriticalTimes& ct);

// Log-domain deviation between the exact product engine and the macroscopic
// limit on the config's grid. Points where ln|f|_limit == 0 are excluded from
// the relative measure and reported as an absolute deviation instead.
struct FactorDeviation {
    double max_relative{0.0};
    double max_absolute{0.0};
    std::size_t relative_points{0};
    std::size_t absolute_points{0};
};

struct EngineComparison {
    FactorDeviation single;  // exact_f_single vs limit_f_single
    FactorDeviation f1;
    FactorDeviation f2;
};

EngineComparison compare_engines(const RunConfig& cfg);
std::string format_comparison(const EngineComparison& cmp);

}  // namespace dephase
