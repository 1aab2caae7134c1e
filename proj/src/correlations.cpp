#include "dephase/correlations.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>

#include "dephase/errors.hpp"
#include "numeric.hpp"

namespace dephase {

namespace {

constexpr double marginal_tolerance = 1e-12;
constexpr double spectrum_tolerance = 1e-10;
constexpr double discord_clamp = 1e-9;

void require_bell_marginals(const XState& x) {
    const bool ok = std::abs(x.p1 - x.p4) <= marginal_tolerance &&
                    std::abs(x.p2 - x.p3) <= marginal_tolerance &&
                    std::abs(x.p1 + x.p2 - 0.5) <= marginal_tolerance;
    if (!ok)
        throw UnsupportedStateError(
            fmt::format("closed form needs maximally mixed marginals, got diagonal ({}, {}, {}, {})", x.p1, x.p2,
                        x.p3, x.p4));
}

double clamp_discord(double d) {
    if (d < -discord_clamp) throw ConsistencyError(fmt::format("negative discord {}", d));
    return std::max(d, 0.0);
}

// sigma_y (x) sigma_y
Matrix4c spin_flip() {
    Matrix4c y = Matrix4c::Zero();
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

void require_density(const Eigen::MatrixXcd& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > spectrum_tolerance)
        throw DomainError("density matrix is not Hermitian");
    if (std::abs(rho.trace() - cplx(1.0, 0.0)) > spectrum_tolerance)
        throw DomainError(fmt::format("density matrix has trace {}", rho.trace().real()));
    const double lowest = hermitian_spectrum(rho).minCoeff();
    if (lowest < -spectrum_tolerance)
        throw DomainError(fmt::format("density matrix has negative eigenvalue {}", lowest));
}

Matrix2c reduce(const Matrix4c& rho, Subsystem keep) {
    Matrix2c r = Matrix2c::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                r(i, j) += keep == Subsystem::A ? rho(2 * i + k, 2 * j + k) : rho(2 * k + i, 2 * k + j);
    return r;
}

// Eigenvalues of a 2x2 Hermitian matrix (not necessarily unit trace).
std::pair<double, double> eig2(const Matrix2c& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double disc = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(m(0, 1)));
    return {0.5 * (a + d + disc), 0.5 * (a + d - disc)};
}

}  // namespace

Eigen::VectorXd hermitian_spectrum(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double von_neumann_entropy(std::span<const double> spectrum) {
    double s = 0.0;
    for (double p : spectrum) {
        if (p < -spectrum_tolerance) throw DomainError(fmt::format("negative eigenvalue {} in spectrum", p));
        s -= detail::xlog2x(p);
    }
    return s;
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
    const Eigen::VectorXd ev = hermitian_spectrum(rho);
    return von_neumann_entropy(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())));
}

ChiValue classical_chi(const XState& x) {
    require_bell_marginals(x);
    const double c3 = 4.0 * x.p1 - 1.0;
    // (|Lambda1| + |Lambda2|)/2 with |Lambda1| = 4|r23|, |Lambda2| = 4|r14|
    const double coherence = 2.0 * (std::abs(x.r23) + std::abs(x.r14));
    if (coherence > std::abs(c3)) return {coherence, ChiBranch::coherence_term};
    return {std::abs(c3), ChiBranch::c3_term};
}

double mutual_information(const XState& x) {
    require_bell_marginals(x);
    const double c3 = 4.0 * x.p1 - 1.0;
    const double l1 = 4.0 * std::abs(x.r23);
    const double l2 = 4.0 * std::abs(x.r14);
    const double lambda[] = {(1.0 - c3 + l1) / 4.0, (1.0 - c3 - l1) / 4.0, (1.0 + c3 + l2) / 4.0,
                             (1.0 + c3 - l2) / 4.0};
    double info = 2.0;
    for (double l : lambda) {
        if (l < -spectrum_tolerance) throw DomainError(fmt::format("X-state has negative eigenvalue {}", l));
        info += detail::xlog2x(l);
    }
    return info;
}

double classical_correlation(const XState& x) { return detail::classical_from_chi(classical_chi(x).chi); }

double discord_closed(const XState& x) {
    return clamp_discord(mutual_information(x) - classical_correlation(x));
}

double concurrence_x(const XState& x) {
    const double gamma1 = std::abs(x.r14) - std::sqrt(x.p2 * x.p3);
    const double gamma2 = std::abs(x.r23) - std::sqrt(x.p1 * x.p4);
    return 2.0 * std::max({0.0, gamma1, gamma2});
}

double concurrence_general(const Matrix4c& rho) {
    require_density(rho);
    // lambda_i are the singular values of sqrt(rho) sqrt(rho~), where
    // rho~ = Y rho* Y and hence sqrt(rho~) = Y sqrt(rho)* Y.
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho);
    const Eigen::Vector4d root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Matrix4c sqrt_rho = solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().adjoint();
    const Matrix4c y = spin_flip();
    const Matrix4c sqrt_flipped = y * sqrt_rho.conjugate() * y;
    Eigen::JacobiSVD<Matrix4c> svd(sqrt_rho * sqrt_flipped);
    const Eigen::Vector4d s = svd.singularValues();  // descending
    return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

double mutual_information_general(const Matrix4c& rho) {
    require_density(rho);
    return von_neumann_entropy(Eigen::MatrixXcd(reduce(rho, Subsystem::A))) +
           von_neumann_entropy(Eigen::MatrixXcd(reduce(rho, Subsystem::B))) -
           von_neumann_entropy(Eigen::MatrixXcd(rho));
}

double conditional_entropy(const Matrix4c& rho, MeasurementAngles angles, Subsystem measured) {
    const double c = std::cos(angles.theta);
    const double s = std::sin(angles.theta);
    const cplx phase = std::polar(1.0, angles.phi);
    const std::array<std::array<cplx, 2>, 2> basis{{{cplx(c), phase * s}, {std::conj(phase) * s, cplx(-c)}}};

    double entropy = 0.0;
    for (const auto& pi : basis) {
        // <pi|_measured rho |pi>_measured, an unnormalized state of the other qubit
        Matrix2c m = Matrix2c::Zero();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        const cplx elem = measured == Subsystem::B ? rho(2 * i + k, 2 * j + l)
                                                                   : rho(2 * k + i, 2 * l + j);
                        m(i, j) += std::conj(pi[k]) * elem * pi[l];
                    }
        const double p = m.trace().real();
        if (p <= 0.0) continue;
        const auto [e1, e2] = eig2(m);
        entropy -= detail::xlog2x(e1 / p) * p + detail::xlog2x(e2 / p) * p;
    }
    return entropy;
}

}  // namespace dephase
