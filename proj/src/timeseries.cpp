#include <fmt/format.h>

#include "dephase/correlations.hpp"
#include "dephase/errors.hpp"
#include "dephase/limits.hpp"
#include "dephase/log.hpp"
#include "numeric.hpp"

#include <spdlog/spdlog.h>

namespace dephase {

DecoherencePair decoherence_factors(const ModelParams& params, Engine engine, double t) {
    switch (engine) {
        case Engine::exact: return exact_f_pair(params, t);
        case Engine::limit:
            return params.same_position() ? limit_f_pair_same(params, t) : limit_f_pair_distinct(params, t);
        case Engine::limit_same: return limit_f_pair_same(params, t);
        case Engine::limit_distinct: return limit_f_pair_distinct(params, t);
    }
    throw ConfigurationError("unknown engine");
}

std::vector<double> uniform_grid(double t_max, int steps) {
    if (steps < 2) throw DomainError("time grid needs at least 2 points");
    if (!(t_max > 0.0)) throw DomainError("time grid needs t_max > 0");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = t_max * i / (steps - 1);
    return grid;
}

CorrelationSample correlations_at(double t, const BellDiagonalState& initial, const DecoherencePair& f) {
    const XState x = evolve_two_qubit(initial, f);
    const ChiValue chi = classical_chi(x);
    CorrelationSample s{};
    s.t = t;
    s.concurrence = concurrence_x(x);
    s.mutual_info = mutual_information(x);
    s.classical_corr = detail::classical_from_chi(chi.chi);
    s.discord = discord_closed(x);
    s.absF1 = std::abs(f.f1);
    s.absF2 = std::abs(f.f2);
    s.branch = chi.branch;
    return s;
}

std::vector<CorrelationSample> correlation_timeseries(const ModelParams& params,
                                                      const BellDiagonalState& initial,
                                                      Engine engine,
                                                      std::span<const double> grid) {
    params.validate();
    if (engine == Engine::limit_same && !params.same_position())
        throw ConfigurationError(
            fmt::format("engine limit_same needs xA == xB, got xA = {}, xB = {}", params.xA, params.xB));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0)) throw DomainError("time grid must start at t >= 0");
        if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("time grid must be strictly increasing");
    }
    logger()->debug("time series: {} points, N = {}, nbar = {}", grid.size(), params.n_spins,
                    params.mean_excitations());

    std::vector<CorrelationSample> out;
    out.reserve(grid.size());
    for (double t : grid) out.push_back(correlations_at(t, initial, decoherence_factors(params, engine, t)));
    return out;
}

}  // namespace dephase
