// limits.hpp: weak-coupling macroscopic limit (N -> inf, q -> 0, qN fixed)
// of the decoherence factors, plus the analytic critical times and t = 0 / inf
// correlation values for the Bell mixture family c1 = +-1, c2 = -+c3.

#pragma once

#include <optional>

#include "dephase/model.hpp"

namespace dephase {

enum class FlipMode { exact, weak };

// exact: sin^2(a); weak: a^2.
double spin_flip_probability(double coupling_angle, FlipMode mode);

struct ProgressFractions {
    double gA{0.0};
    double gB{0.0};
};

// Fraction of the array already traversed by particle p,
// clamp((x_p + v t - x1) / L, 0, 1). A single-spin array (L = 0) is a step.
double progress_fraction(const ModelParams& params, Particle p, double t);
ProgressFractions progress_fractions(const ModelParams& params, double t);

// exp(-(nbar/2) g_A(t))
double limit_f_single(const ModelParams& params, double t);

// Both particles start at the same point: |f1| = 1, |f2| = exp(-2 nbar g).
// Throws ConfigurationError when xA != xB.
DecoherencePair limit_f_pair_same(const ModelParams& params, double t);

// Particles start apart. With the leading particle's progress g_lead and the
// trailing one's g_trail:
//   |f1| = exp(-(nbar/2)(g_lead - g_trail)),
//   |f2| = exp(-(nbar/2) g_lead - (3 nbar/2) g_trail).
// Reduces to limit_f_pair_same when xA == xB.
DecoherencePair limit_f_pair_distinct(const ModelParams& params, double t);

// Critical times for the mixture family. Each returns std::nullopt when the
// event never happens for the given c3 and geometry.

// First zero of the concurrence (same position, c3 in (0, 1)).
std::optional<double> sudden_death_time(const ModelParams& params, double c3);

// Time at which the classical-correlation maximizer switches from the
// coherence term to |c3| (same position, c3 in (1/3, 1)).
std::optional<double> discord_sudden_change_time(const ModelParams& params, double c3);

// Same switch while only the leading particle is inside the array (distinct
// positions). Absent when |c3| <= exp(nbar (x_trail - x_lead) / (2L)).
std::optional<double> second_period_change_time(const ModelParams& params, double c3);

struct AsymptoticCorrelations {
    double C_0;
    double C_inf;
    double D_0;    // bits
    double D_inf;  // bits, with the |00><11| coherence fully erased
};

AsymptoticCorrelations asymptotic_correlations(double c3);

}  // namespace dephase
