#include "dephase/states.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "dephase/errors.hpp"

namespace dephase {

namespace {
constexpr double positivity_tolerance = 1e-12;

double clamp_unit(double c, const char* name) {
    if (!std::isfinite(c)) throw InvalidStateError(fmt::format("{} is not finite", name));
    if (std::abs(c) > 1.0 + positivity_tolerance)
        throw InvalidStateError(fmt::format("|{}| = {} exceeds 1", name, std::abs(c)));
    return std::clamp(c, -1.0, 1.0);
}
}  // namespace

std::array<double, 4> BellDiagonalState::eigenvalues() const {
    return {(1.0 - c1 - c2 - c3) / 4.0, (1.0 - c1 + c2 + c3) / 4.0, (1.0 + c1 - c2 + c3) / 4.0,
            (1.0 + c1 + c2 - c3) / 4.0};
}

Matrix4c BellDiagonalState::matrix() const {
    return evolve_two_qubit(*this, DecoherencePair{}).matrix();
}

BellDiagonalState make_bell_diagonal(double c1, double c2, double c3) {
    BellDiagonalState s{clamp_unit(c1, "c1"), clamp_unit(c2, "c2"), clamp_unit(c3, "c3")};
    static constexpr const char* labels[] = {"(1-c1-c2-c3)/4", "(1-c1+c2+c3)/4", "(1+c1-c2+c3)/4",
                                             "(1+c1+c2-c3)/4"};
    const auto ev = s.eigenvalues();
    for (std::size_t i = 0; i < ev.size(); ++i) {
        if (ev[i] < -positivity_tolerance)
            throw InvalidStateError(fmt::format("not a density matrix: eigenvalue {} = {} < 0 for c = ({}, {}, {})",
                                                labels[i], ev[i], c1, c2, c3));
    }
    return s;
}

BellDiagonalState bell_state(BellLabel label) {
    switch (label) {
        case BellLabel::phi_plus: return {1.0, -1.0, 1.0};
        case BellLabel::phi_minus: return {-1.0, 1.0, 1.0};
        case BellLabel::psi_plus: return {1.0, 1.0, -1.0};
        case BellLabel::psi_minus: return {-1.0, -1.0, -1.0};
    }
    return {};
}

BellDiagonalState mixture_state(double c3, int sign) {
    if (!(std::abs(c3) < 1.0)) throw DomainError(fmt::format("mixture state needs |c3| < 1, got {}", c3));
    if (sign != 1 && sign != -1) throw DomainError(fmt::format("mixture sign must be +1 or -1, got {}", sign));
    return make_bell_diagonal(sign, -sign * c3, c3);
}

Matrix4c XState::matrix() const {
    Matrix4c m = Matrix4c::Zero();
    m(0, 0) = p1;
    m(1, 1) = p2;
    m(2, 2) = p3;
    m(3, 3) = p4;
    m(0, 3) = r14;
    m(3, 0) = std::conj(r14);
    m(1, 2) = r23;
    m(2, 1) = std::conj(r23);
    return m;
}

XState evolve_two_qubit(const BellDiagonalState& s, const DecoherencePair& f) {
    const cplx lambda1 = (s.c1 + s.c2) * f.f1;
    const cplx lambda2 = (s.c1 - s.c2) * f.f2;
    XState x;
    x.p1 = x.p4 = (1.0 + s.c3) / 4.0;
    x.p2 = x.p3 = (1.0 - s.c3) / 4.0;
    x.r14 = lambda2 / 4.0;
    x.r23 = std::conj(lambda1) / 4.0;
    return x;
}

double QubitState::purity() const { return (rho * rho).trace().real(); }

QubitState evolve_single_qubit(cplx c0, cplx c1, double f) {
    const double norm = std::norm(c0) + std::norm(c1);
    if (!(std::abs(norm - 1.0) <= 1e-12))
        throw DomainError(fmt::format("amplitudes not normalized: |c0|^2 + |c1|^2 = {}", norm));
    QubitState q;
    q.rho(0, 0) = std::norm(c0);
    q.rho(1, 1) = std::norm(c1);
    q.rho(1, 0) = c1 * std::conj(c0) * f;
    q.rho(0, 1) = std::conj(q.rho(1, 0));
    return q;
}

}  // namespace dephase
