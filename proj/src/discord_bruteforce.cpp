#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "dephase/correlations.hpp"
#include "dephase/errors.hpp"

namespace dephase {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;
constexpr double two_pi = 2.0 * std::numbers::pi;

struct Candidate {
    double value;
    MeasurementAngles angles;
};

// Compass search on (theta, phi); theta is clamped to [0, pi/2], phi wraps.
Candidate refine(const Matrix4c& rho, Candidate start, double step_theta, double step_phi, double min_step,
                 Subsystem measured) {
    Candidate best = start;
    for (int iter = 0; iter < 100000 && std::max(step_theta, step_phi) >= min_step; ++iter) {
        const MeasurementAngles trial[] = {
            {std::min(best.angles.theta + step_theta, half_pi), best.angles.phi},
            {std::max(best.angles.theta - step_theta, 0.0), best.angles.phi},
            {best.angles.theta, std::fmod(best.angles.phi + step_phi, two_pi)},
            {best.angles.theta, std::fmod(best.angles.phi - step_phi + two_pi, two_pi)},
        };
        Candidate next = best;
        for (const auto& a : trial) {
            const double v = conditional_entropy(rho, a, measured);
            if (v < next.value) next = {v, a};
        }
        if (next.value < best.value) {
            best = next;
        } else {
            step_theta *= 0.5;
            step_phi *= 0.5;
        }
    }
    return best;
}

}  // namespace

BruteForceDiscord discord_bruteforce(const Matrix4c& rho, const BruteForceOptions& opts) {
    if (opts.theta_steps < 2 || opts.phi_steps < 1) throw DomainError("measurement grid too small");
    const double mutual = mutual_information_general(rho);  // validates rho

    const double d_theta = half_pi / (opts.theta_steps - 1);
    const double d_phi = two_pi / opts.phi_steps;

    std::vector<Candidate> grid;
    grid.reserve(static_cast<std::size_t>(opts.theta_steps) * static_cast<std::size_t>(opts.phi_steps));
    for (int i = 0; i < opts.theta_steps; ++i) {
        for (int j = 0; j < opts.phi_steps; ++j) {
            const MeasurementAngles a{i * d_theta, j * d_phi};
            grid.push_back({conditional_entropy(rho, a, opts.measured), a});
        }
    }
    // Stable sort keeps the (theta, phi) lexicographic order among ties.
    const auto n_refine = std::min<std::size_t>(static_cast<std::size_t>(std::max(opts.refine_candidates, 1)),
                                                grid.size());
    std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(n_refine), grid.end(),
                      [](const Candidate& a, const Candidate& b) {
                          if (a.value != b.value) return a.value < b.value;
                          if (a.angles.theta != b.angles.theta) return a.angles.theta < b.angles.theta;
                          return a.angles.phi < b.angles.phi;
                      });

    // The objective is smooth and quadratic near its minimum, so an angular
    // step of sqrt(tol)/100 puts the objective well inside tol.
    const double min_step = std::sqrt(opts.tolerance) * 1e-2;
    Candidate best = grid.front();
    for (std::size_t k = 0; k < n_refine; ++k) {
        const Candidate c = refine(rho, grid[k], d_theta, d_phi, min_step, opts.measured);
        if (c.value < best.value) best = c;
    }

    const Matrix4c& r = rho;
    Matrix2c other = Matrix2c::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                other(i, j) += opts.measured == Subsystem::B ? r(2 * i + k, 2 * j + k) : r(2 * k + i, 2 * k + j);

    BruteForceDiscord out{};
    out.mutual = mutual;
    out.classical = von_neumann_entropy(Eigen::MatrixXcd(other)) - best.value;
    out.discord = mutual - out.classical;
    if (out.discord < -1e-9) throw ConsistencyError("brute-force discord came out negative");
    out.discord = std::max(out.discord, 0.0);
    out.best = best.angles;
    return out;
}

}  // namespace dephase
