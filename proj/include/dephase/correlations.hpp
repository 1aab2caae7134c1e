// correlations.hpp: concurrence, mutual information, classical correlation
// and quantum discord of two-qubit states. Information is measured in bits.
//
// The closed forms act on X-states produced from Bell-diagonal states; the
// *_general / *_bruteforce routines work on any 4x4 density matrix and serve
// as independent checks of the closed forms.

#pragma once

#include <span>
#include <vector>

#include "dephase/states.hpp"

namespace dephase {

// -sum p log2 p with 0 log 0 = 0. Throws DomainError for entries below -1e-10.
double von_neumann_entropy(std::span<const double> spectrum);
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

// Hermitian eigenvalues in ascending order.
Eigen::VectorXd hermitian_spectrum(const Eigen::MatrixXcd& m);

// Which term of chi = max(|c3|, (|L1| + |L2|)/2) is the larger one. On a tie
// the c3 term is reported.
enum class ChiBranch { c3_term, coherence_term };

struct ChiValue {
    double chi;
    ChiBranch branch;
};

// Closed forms below throw UnsupportedStateError unless the X-state has
// maximally mixed marginals (p1 = p4, p2 = p3, p1 + p2 = 1/2).
ChiValue classical_chi(const XState& x);
double mutual_information(const XState& x);
double classical_correlation(const XState& x);
double discord_closed(const XState& x);

// 2 max{0, |r14| - sqrt(p2 p3), |r23| - sqrt(p1 p4)}
double concurrence_x(const XState& x);

// Wootters concurrence from the spin-flipped matrix. Throws DomainError for
// a matrix that is not a density matrix (tolerance 1e-10).
double concurrence_general(const Matrix4c& rho);

// Von Neumann entropies of rho_AB and its reductions.
double mutual_information_general(const Matrix4c& rho);

enum class Subsystem { A, B };

struct MeasurementAngles {
    double theta{0.0};  // [0, pi/2]
    double phi{0.0};    // [0, 2 pi)
};

struct BruteForceOptions {
    int theta_steps{181};
    int phi_steps{360};
    double tolerance{1e-8};    // objective change at which refinement stops
    int refine_candidates{4};  // best grid cells that get refined
    Subsystem measured{Subsystem::B};
};

struct BruteForceDiscord {
    double discord;
    double classical;
    double mutual;
    MeasurementAngles best;
};

// Projective measurement {|pi1>, |pi2>} with
//   |pi1> = cos(theta)|0> + e^{i phi} sin(theta)|1>,
//   |pi2> = e^{-i phi} sin(theta)|0> - cos(theta)|1>
// on the chosen subsystem; maximizes S(rho_other) - S(rho_other | Pi) by a
// (theta, phi) grid followed by a compass search.
BruteForceDiscord discord_bruteforce(const Matrix4c& rho, const BruteForceOptions& opts = {});

// S(rho_other | Pi) for one measurement; exposed for tests.
double conditional_entropy(const Matrix4c& rho, MeasurementAngles angles, Subsystem measured);

// One row of a correlation time series.
struct CorrelationSample {
    double t;
    double concurrence;
    double discord;
    double mutual_info;
    double classical_corr;
    double absF1;
    double absF2;
    ChiBranch branch;
};

// Evaluates all closed-form quantities for one evolved state.
CorrelationSample correlations_at(double t, const BellDiagonalState& initial, const DecoherencePair& f);

enum class Engine { exact, limit, limit_same, limit_distinct };

// Factors from the requested engine. `limit` picks the same- or
// distinct-position form from the geometry; `limit_same` with xA != xB throws
// ConfigurationError.
DecoherencePair decoherence_factors(const ModelParams& params, Engine engine, double t);

// Uniform grid of `steps` points over [0, t_max].
std::vector<double> uniform_grid(double t_max, int steps);

// One sample per grid point. Throws DomainError when the grid is not strictly
// increasing or starts below 0.
std::vector<CorrelationSample> correlation_timeseries(const ModelParams& params,
                                                      const BellDiagonalState& initial,
                                                      Engine engine,
                                                      std::span<const double> grid);

}  // namespace dephase
