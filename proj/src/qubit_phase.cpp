#include "qphase/qubit_phase.hpp"

#include <cmath>
#include <stdexcept>

namespace qphase {

namespace {
constexpr double half_pi = std::numbers::pi / 2.0;
}

LadderSet ladder() {
    LadderSet l;
    l.s_plus(1, 0) = 1.0;   // |1><0|
    l.s_minus(0, 1) = 1.0;  // |0><1|
    l.s_z(0, 0) = -0.5;
    l.s_z(1, 1) = 0.5;
    l.identity = CMat::identity(2);
    return l;
}

PhaseExponential phase_exponential(double phi0) {
    PhaseExponential e;
    e.phi0 = phi0;
    e.e_operator(0, 1) = 1.0;
    e.e_operator(1, 0) = std::polar(1.0, phi0);
    return e;
}

QuantumState bloch_state(double theta, double phi) {
    if (theta < 0.0 || theta > std::numbers::pi)
        throw std::invalid_argument("bloch_state: theta must lie in [0, pi]");
    return QuantumState::pure(
        {std::sin(theta / 2.0), std::polar(std::cos(theta / 2.0), phi)});
}

std::array<double, 3> bloch_vector(const QuantumState& s) {
    const CMat rho = s.density_matrix();
    if (rho.dim() != 2) throw std::invalid_argument("bloch_vector: one-qubit state required");
    const auto l = ladder();
    const cplx sx = ((l.s_plus + l.s_minus) * rho).trace();
    const cplx sy = ((l.s_plus - l.s_minus) * rho * cplx(0.0, -1.0)).trace();
    const cplx sz = (l.s_z * rho * cplx(2.0, 0.0)).trace();
    return {std::real(sx), std::real(sy), std::real(sz)};
}

std::array<PhaseEigenstate, 2> phase_eigenstates() {
    const double r = 1.0 / std::sqrt(2.0);
    return {{{half_pi, {r, cplx(0.0, r)}}, {-half_pi, {r, cplx(0.0, -r)}}}};
}

CMat phase_operator_function(const std::function<double(double)>& f) {
    CMat m(2);
    for (const auto& [phase, vec] : phase_eigenstates()) {
        m += outer(vec) * cplx(f(phase), 0.0);
    }
    return m;
}

std::pair<double, double> hermitian_phase_distribution(const QuantumState& s) {
    const CMat rho = s.density_matrix();
    if (rho.dim() != 2)
        throw std::invalid_argument("hermitian_phase_distribution: one-qubit state required");
    const auto eig = phase_eigenstates();
    const double p_plus = std::real((rho * outer(eig[0].state)).trace());
    const double p_minus = std::real((rho * outer(eig[1].state)).trace());
    return {p_plus, p_minus};
}

}  // namespace qphase
