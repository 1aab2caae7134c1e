// model.hpp: two qubits crossing a 1D spin array: parameters and the exact
// finite-N decoherence factors.

#pragma once

#include <complex>
#include <cstddef>

namespace dephase {

using cplx = std::complex<double>;

enum class Particle { A, B };

// Geometry and coupling of the particles + array. Lengths are in units of the
// lattice spacing scale, times in T = spacing / velocity.
struct ModelParams {
    std::size_t n_spins{1};
    double coupling_angle{0.0};  // a = V0*Omega/(hbar v); one spin is rotated by a per pass
    double x1{1.0};              // first array spin
    double spacing{1.0};
    double velocity{1.0};        // shared by both particles
    double xA{0.0};
    double xB{0.0};
    double omegaA{0.0};
    double omegaB{0.0};
    double array_frequency{0.0};  // level splitting of the array; drops out of |f1|, |f2|

    // sin^2(a): probability that one pass flips one array spin.
    double flip_probability() const;
    // q * N
    double mean_excitations() const;
    double x_last() const;
    // x_N - x_1
    double length() const;
    double initial_position(Particle p) const { return p == Particle::A ? xA : xB; }
    bool same_position() const { return xA == xB; }

    // Throws DomainError when an invariant is violated.
    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

// Complex factors multiplying the two coherence sectors of the X-state:
// f1 on the |01><10| corner, f2 on the |00><11| corner.
struct DecoherencePair {
    cplx f1{1.0, 0.0};
    cplx f2{1.0, 0.0};
};

// x_n = x1 + (n-1) * spacing, with n in [1, N].
double spin_position(const ModelParams& params, std::size_t n);

// Unit step with heaviside(0) == 0.
inline int heaviside(double y) { return y > 0.0 ? 1 : 0; }

// Rotation angle accumulated by spin n once particle p has reached position
// x_p + v t: either 0 or a for delta-shaped potentials.
double tipping_angle(const ModelParams& params, Particle p, std::size_t n, double t);

// Number of spins strictly behind particle p at time t, i.e. spins with a
// nonzero tipping angle. Nondecreasing in t, in [0, N].
std::size_t passed_count(const ModelParams& params, Particle p, double t);

// Single-particle (A) decoherence factor prod_n cos(alpha_n(t)).
double exact_f_single(const ModelParams& params, double t);

// Two-particle factors with environment starting in the all-down state.
// Spins passed by both particles contribute cos(0) to f1 and cos(2a) to f2;
// spins passed by one particle contribute cos(a) to both.
DecoherencePair exact_f_pair(const ModelParams& params, double t);

}  // namespace dephase
