#pragma once

#include <array>
#include <functional>
#include <numbers>
#include <utility>

#include "qphase/core.hpp"

namespace qphase {

/// su(2)-like ladder algebra of the qubit:
/// S+ = |1><0|, S- = |0><1|, Sz = (|1><1| - |0><0|)/2.
struct LadderSet {
    CMat s_plus{2};
    CMat s_minus{2};
    CMat s_z{2};
    CMat identity{2};
};

LadderSet ladder();

/// Unitary solution E of the polar decomposition S- = sqrt(S- S+) E,
/// E = |0><1| + e^{i phi0} |1><0|. The default phi0 = pi makes complex
/// conjugation of the wave function reverse the phase sign.
struct PhaseExponential {
    CMat e_operator{2};
    double phi0 = std::numbers::pi;
};

PhaseExponential phase_exponential(double phi0 = std::numbers::pi);

/// sin(theta/2)|0> + e^{i phi} cos(theta/2)|1>, theta in [0, pi].
QuantumState bloch_state(double theta, double phi);

/// (s_x, s_y, s_z) with s_j = Tr[rho sigma_j], sigma_j = 2 S_j.
std::array<double, 3> bloch_vector(const QuantumState& s);

struct PhaseEigenstate {
    double eigenphase;  // +pi/2 or -pi/2
    CVec state;
};

/// Eigenstates (|0> +- i|1>)/sqrt(2) of the default E, eigenvalues e^{+-i pi/2}.
std::array<PhaseEigenstate, 2> phase_eigenstates();

/// F(Phi) = sum_{+-} |phi_+-> F(+-pi/2) <phi_+-|.
CMat phase_operator_function(const std::function<double(double)>& f);

/// Two-point distribution P(phi_+-) = Tr[rho |phi_+-><phi_+-|].
std::pair<double, double> hermitian_phase_distribution(const QuantumState& s);

}  // namespace qphase
