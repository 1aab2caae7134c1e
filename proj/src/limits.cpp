#include "dephase/limits.hpp"

#include <algorithm>
#include <cmath>

#include "dephase/errors.hpp"
#include "numeric.hpp"

namespace dephase {

namespace {

void require_mixture_c3(double c3) {
    if (!(std::abs(c3) < 1.0)) throw DomainError("mixture family requires |c3| < 1");
}

void require_same(const ModelParams& params) {
    if (!params.same_position())
        throw ConfigurationError("operation requires both particles at the same initial position");
}

// Time at which the particle starting at x0 has crossed a fraction g of the array.
double time_at_progress(const ModelParams& params, double x0, double g) {
    return (params.x1 - x0 + g * params.length()) / params.velocity;
}

// Progress g at which |f2| = exp(-2 nbar g) drops to `level` in (0, 1), if
// that happens inside the array.
std::optional<double> same_position_crossing(const ModelParams& params, double level) {
    const double nbar = params.mean_excitations();
    if (!(nbar > 0.0) || !(level > 0.0)) return std::nullopt;
    const double g = -std::log(level) / (2.0 * nbar);
    if (g > 1.0) return std::nullopt;
    return g;
}

}  // namespace

double spin_flip_probability(double coupling_angle, FlipMode mode) {
    if (mode == FlipMode::weak) return coupling_angle * coupling_angle;
    const double s = std::sin(coupling_angle);
    return s * s;
}

double progress_fraction(const ModelParams& params, Particle p, double t) {
    const double travelled = params.initial_position(p) + params.velocity * t - params.x1;
    const double L = params.length();
    if (L <= 0.0) return heaviside(travelled);
    return std::clamp(travelled / L, 0.0, 1.0);
}

ProgressFractions progress_fractions(const ModelParams& params, double t) {
    return {progress_fraction(params, Particle::A, t), progress_fraction(params, Particle::B, t)};
}

double limit_f_single(const ModelParams& params, double t) {
    return std::exp(-0.5 * params.mean_excitations() * progress_fraction(params, Particle::A, t));
}

DecoherencePair limit_f_pair_same(const ModelParams& params, double t) {
    require_same(params);
    const double nbar = params.mean_excitations();
    const double g = progress_fraction(params, Particle::A, t);
    DecoherencePair f;
    f.f1 = std::polar(1.0, (params.omegaA - params.omegaB) * t);
    f.f2 = std::polar(std::exp(-2.0 * nbar * g), -(params.omegaA + params.omegaB) * t);
    return f;
}

DecoherencePair limit_f_pair_distinct(const ModelParams& params, double t) {
    const double nbar = params.mean_excitations();
    const auto [gA, gB] = progress_fractions(params, t);
    const double lead = std::max(gA, gB);
    const double trail = std::min(gA, gB);
    DecoherencePair f;
    f.f1 = std::polar(std::exp(-0.5 * nbar * (lead - trail)), (params.omegaA - params.omegaB) * t);
    f.f2 = std::polar(std::exp(-0.5 * nbar * lead - 1.5 * nbar * trail),
                      -(params.omegaA + params.omegaB) * t);
    return f;
}

std::optional<double> sudden_death_time(const ModelParams& params, double c3) {
    require_mixture_c3(c3);
    require_same(params);
    if (c3 <= 0.0) return std::nullopt;
    // C(t) = ((1 + c3)|f2| - (1 - c3)) / 2 reaches zero at |f2| = (1 - c3)/(1 + c3).
    const auto g = same_position_crossing(params, (1.0 - c3) / (1.0 + c3));
    if (!g) return std::nullopt;
    return time_at_progress(params, params.xA, *g);
}

std::optional<double> discord_sudden_change_time(const ModelParams& params, double c3) {
    require_mixture_c3(c3);
    require_same(params);
    if (c3 <= 1.0 / 3.0) return std::nullopt;
    // (1 - c3 + (1 + c3)|f2|)/2 = c3  <=>  |f2| = (3 c3 - 1)/(1 + c3)
    const auto g = same_position_crossing(params, (3.0 * c3 - 1.0) / (1.0 + c3));
    if (!g) return std::nullopt;
    return time_at_progress(params, params.xA, *g);
}

std::optional<double> second_period_change_time(const ModelParams& params, double c3) {
    require_mixture_c3(c3);
    if (params.same_position())
        throw ConfigurationError("second-period change needs distinct initial positions");

    const double lead = std::max(params.xA, params.xB);
    const double trail = std::min(params.xA, params.xB);
    const double L = params.length();
    const double nbar = params.mean_excitations();
    if (!(L > 0.0) || !(nbar > 0.0)) return std::nullopt;

    // Only the leader is inside: |f1| = |f2| = exp(-(nbar/2) g_lead) and chi
    // switches to |c3| once that value drops below |c3|.
    const double window = std::min((lead - trail) / L, 1.0);
    // the boundary itself counts as absent; nbar carries rounding from sin^2
    if (std::abs(c3) <= std::exp(-0.5 * nbar * window) * (1.0 + 1e-12)) return std::nullopt;
    const double g = -2.0 * std::log(std::abs(c3)) / nbar;
    return time_at_progress(params, lead, g);
}

AsymptoticCorrelations asymptotic_correlations(double c3) {
    require_mixture_c3(c3);
    using detail::xlog2x;
    AsymptoticCorrelations r{};
    r.C_0 = std::abs(c3);
    r.C_inf = c3 < 0.0 ? std::abs(c3) : 0.0;
    r.D_0 = 0.5 * xlog2x(1.0 - c3) + 0.5 * xlog2x(1.0 + c3);
    const double theta = std::max(std::abs(c3), 0.5 * (1.0 - c3));
    r.D_inf = 0.5 * (1.0 - c3) * std::log2(2.0 * (1.0 - c3)) + 0.5 * xlog2x(1.0 + c3) -
              0.5 * xlog2x(1.0 + theta) - 0.5 * xlog2x(1.0 - theta);
    return r;
}

}  // namespace dephase
