#include "dephase/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dephase/errors.hpp"

namespace dephase {

double ModelParams::flip_probability() const {
    const double s = std::sin(coupling_angle);
    return s * s;
}

double ModelParams::mean_excitations() const {
    return flip_probability() * static_cast<double>(n_spins);
}

double ModelParams::x_last() const {
    return x1 + static_cast<double>(n_spins - 1) * spacing;
}

double ModelParams::length() const { return x_last() - x1; }

void ModelParams::validate() const {
    if (n_spins < 1) throw DomainError("n_spins must be >= 1");
    if (!(spacing > 0.0) || !std::isfinite(spacing)) throw DomainError("spacing must be > 0");
    if (!(velocity > 0.0) || !std::isfinite(velocity)) throw DomainError("velocity must be > 0");
    if (!std::isfinite(coupling_angle)) throw DomainError("coupling angle must be finite");
    if (!std::isfinite(x1) || !std::isfinite(xA) || !std::isfinite(xB))
        throw DomainError("positions must be finite");
    if (!(xA < x1)) throw DomainError("xA must lie left of the first spin x1");
    if (!(xB < x1)) throw DomainError("xB must lie left of the first spin x1");
    if (!(array_frequency >= 0.0)) throw DomainError("array frequency must be >= 0");
}

double spin_position(const ModelParams& params, std::size_t n) {
    if (n < 1 || n > params.n_spins)
        throw DomainError("spin index " + std::to_string(n) + " outside [1, " +
                          std::to_string(params.n_spins) + "]");
    return params.x1 + static_cast<double>(n - 1) * params.spacing;
}

double tipping_angle(const ModelParams& params, Particle p, std::size_t n, double t) {
    const double front = params.initial_position(p) + params.velocity * t;
    return params.coupling_angle * heaviside(front - spin_position(params, n));
}

std::size_t passed_count(const ModelParams& params, Particle p, double t) {
    const double front = params.initial_position(p) + params.velocity * t;
    const auto n_max = static_cast<long long>(params.n_spins);

    // Closed-form guess, then settle against the actual spin positions so the
    // count agrees with tipping_angle even when front sits on a spin.
    const double guess = std::ceil((front - params.x1) / params.spacing);
    long long k = 0;
    if (guess > 0.0) k = guess >= static_cast<double>(n_max) ? n_max : static_cast<long long>(guess);

    const auto passed = [&](long long n) {  // 1-based
        return heaviside(front - spin_position(params, static_cast<std::size_t>(n))) == 1;
    };
    while (k > 0 && !passed(k)) --k;
    while (k < n_max && passed(k + 1)) ++k;
    return static_cast<std::size_t>(k);
}

double exact_f_single(const ModelParams& params, double t) {
    const auto m = passed_count(params, Particle::A, t);
    return std::pow(std::cos(params.coupling_angle), static_cast<double>(m));
}

DecoherencePair exact_f_pair(const ModelParams& params, double t) {
    // Passed spins form a prefix of the array for each particle, so the
    // overlap only depends on how many spins each particle has crossed.
    const auto mA = passed_count(params, Particle::A, t);
    const auto mB = passed_count(params, Particle::B, t);
    const auto both = static_cast<double>(std::min(mA, mB));
    const auto one = static_cast<double>(std::max(mA, mB) - std::min(mA, mB));

    const double a = params.coupling_angle;
    const double single = std::pow(std::cos(a), one);
    const double doubled = std::pow(std::cos(2.0 * a), both);

    DecoherencePair f;
    f.f1 = std::polar(1.0, (params.omegaA - params.omegaB) * t) * single;
    f.f2 = std::polar(1.0, -(params.omegaA + params.omegaB) * t) * (single * doubled);
    return f;
}

}  // namespace dephase
