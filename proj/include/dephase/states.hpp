// states.hpp: Bell-diagonal initial states, the evolved two-qubit X-state,
// and the single-qubit phase-damping channel.
//
// Basis order throughout is |00>, |01>, |10>, |11> with |0> = spin down and
// qubit A the left tensor factor.

#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>

#include "dephase/model.hpp"

namespace dephase {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

// rho = (I + sum_j c_j sigma_j (x) sigma_j) / 4
struct BellDiagonalState {
    double c1{0.0};
    double c2{0.0};
    double c3{0.0};

    // Eigenvalues in Bell-basis order (Psi-, Phi-, Phi+, Psi+ weights).
    std::array<double, 4> eigenvalues() const;
    Matrix4c matrix() const;

    bool operator==(const BellDiagonalState&) const = default;
};

enum class BellLabel { phi_plus, phi_minus, psi_plus, psi_minus };

// Throws InvalidStateError when |c_j| > 1 or an eigenvalue is below -1e-12.
BellDiagonalState make_bell_diagonal(double c1, double c2, double c3);

BellDiagonalState bell_state(BellLabel label);

// (1 + c3)/2 |Phi><Phi| + (1 - c3)/2 |Psi><Psi|: c1 = sign, c2 = -sign c3.
// Throws DomainError when |c3| >= 1 or sign is not +-1.
BellDiagonalState mixture_state(double c3, int sign);

// Two-qubit density matrix whose nonzero entries are the diagonal and the
// anti-diagonal corners rho14 = r14, rho23 = r23.
struct XState {
    double p1{0.25}, p2{0.25}, p3{0.25}, p4{0.25};
    cplx r14{0.0, 0.0};
    cplx r23{0.0, 0.0};

    Matrix4c matrix() const;
};

// Diagonal ((1+c3), (1-c3), (1-c3), (1+c3))/4, r14 = (c1 - c2) f2 / 4 and
// r23 = conj((c1 + c2) f1) / 4.
XState evolve_two_qubit(const BellDiagonalState& s, const DecoherencePair& f);

struct QubitState {
    Matrix2c rho;

    double purity() const;
};

// |c0|^2 |v><v| + |c1|^2 |^><^| + (c1 c0* f |^><v| + h.c.). Throws DomainError
// when |c0|^2 + |c1|^2 differs from 1 by more than 1e-12.
QubitState evolve_single_qubit(cplx c0, cplx c1, double f);

}  // namespace dephase
