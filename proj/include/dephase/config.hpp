// config.hpp: line-oriented key=value run configuration.
//
//   # fig1 geometry
//   N=1001
//   q=0.005          (or a=<coupling angle>)
//   x1=100
//   xN=1100          (or spacing=<lattice spacing>)
//   state=phi+       (phi+|phi-|psi+|psi-|bd|mixture)
//   t_max=1300
//   steps=1301
//
// Optional keys: v, xA, xB, omegaA, omegaB, omega, c1, c2, c3, sign, engine,
// out. Unknown keys, repeated keys and unparsable values are rejected.

#pragma once

#include <string>
#include <string_view>

#include "dephase/correlations.hpp"
#include "dephase/model.hpp"
#include "dephase/states.hpp"

namespace dephase {

enum class StateKind { phi_plus, phi_minus, psi_plus, psi_minus, bell_diagonal, mixture };

struct InitialStateSpec {
    StateKind kind{StateKind::phi_plus};
    double c1{0.0};
    double c2{0.0};
    double c3{0.0};
    int sign{1};

    // Throws InvalidStateError / DomainError for invalid parameters.
    BellDiagonalState state() const;

    bool operator==(const InitialStateSpec&) const = default;
};

struct RunConfig {
    ModelParams model;
    InitialStateSpec initial;
    Engine engine{Engine::limit};
    double t_max{0.0};
    int steps{0};
    std::string output;  // empty: unset

    // steps >= 2, t_max > 0, model invariants, valid initial state.
    void validate() const;

    bool operator==(const RunConfig&) const = default;
};

// Throws ParseError carrying the line of the offending entry.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

// Canonical text that parses back to an identical RunConfig.
std::string serialize_config(const RunConfig& cfg);

std::string_view to_string(Engine e);
std::string_view to_string(StateKind k);

}  // namespace dephase
