#include "qphase/twoqubit.hpp"

#include <cmath>
#include <stdexcept>

#include "qphase/qubit_phase.hpp"

namespace qphase {

SumDiffOperators build_sum_diff() {
    const auto l = ladder();
    const CMat e = phase_exponential().e_operator;

    SumDiffOperators ops;
    ops.e_plus = kron(e, e);
    ops.e_minus = kron(e, e.adjoint());
    ops.s_plus_z = kron(l.s_z, l.identity) + kron(l.identity, l.s_z);
    ops.s_minus_z = kron(l.s_z, l.identity) - kron(l.identity, l.s_z);

    // -exp(i pi S_(+)); diagonal since S_(+) is.
    ops.v = CMat(4);
    for (int i = 0; i < 4; ++i)
        ops.v(i, i) = -std::polar(1.0, std::numbers::pi * std::real(ops.s_plus_z(i, i)));
    return ops;
}

namespace {

CVec sg_state(double phi) {
    const double r = 1.0 / std::sqrt(two_pi);
    return {r, std::polar(r, phi)};
}

}  // namespace

CVec sg_product_state(double phi_a, double phi_b) {
    return kron_vec(sg_state(phi_a), sg_state(phi_b));
}

CastBasisState cast_basis_state(double phi_plus, double phi_minus, int v) {
    if (v != 0 && v != 1) throw std::invalid_argument("cast_basis_state: v must be 0 or 1");
    const double phi_a = 0.5 * (phi_plus + phi_minus);
    const double phi_b = 0.5 * (phi_plus - phi_minus);

    const CVec branch0 = sg_product_state(phi_a, phi_b);
    const CVec branch1 = sg_product_state(phi_a + std::numbers::pi, phi_b + std::numbers::pi);
    const cplx sign = v == 0 ? 1.0 : -1.0;
    const cplx pre = 0.5 * std::polar(1.0, v * phi_a);

    CVec vec(4);
    for (int i = 0; i < 4; ++i) vec[i] = pre * (branch0[i] + sign * branch1[i]);
    return {wrap_phase(phi_plus), wrap_phase(phi_minus), v, std::move(vec)};
}

std::function<double(double, double)> cast_distribution(
    std::function<double(double, double)> p) {
    return [p = std::move(p)](double phi_plus, double phi_minus) {
        const double a = 0.5 * (phi_plus + phi_minus);
        const double b = 0.5 * (phi_plus - phi_minus);
        return 0.5 * (p(a, b) + p(a + std::numbers::pi, b + std::numbers::pi));
    };
}

std::function<CMat(double, double)> cast_povm(double gamma_a, double gamma_b) {
    const PhasePovm pa = phase_povm(gamma_a);
    const PhasePovm pb = phase_povm(gamma_b);
    return [pa, pb](double phi_plus, double phi_minus) {
        const double a = 0.5 * (phi_plus + phi_minus);
        const double b = 0.5 * (phi_plus - phi_minus);
        const CMat branch0 = kron(povm_element(pa, a), povm_element(pb, b));
        const CMat branch1 = kron(povm_element(pa, a + std::numbers::pi),
                                  povm_element(pb, b + std::numbers::pi));
        return (branch0 + branch1) * cplx(0.5, 0.0);
    };
}

CMat marginal_diff_povm(double gamma_a, double gamma_b, double phi_minus) {
    phase_povm(gamma_a);
    phase_povm(gamma_b);
    // Closed form of int dphi' Delta_A(phi_- + phi') (x) Delta_B(phi'):
    // only the phi'-free cross terms survive the integration.
    const auto l = ladder();
    const cplx g = gamma_a * gamma_b * std::polar(1.0, phi_minus);
    CMat m = CMat::identity(4) + kron(l.s_plus, l.s_minus) * g +
             kron(l.s_minus, l.s_plus) * std::conj(g);
    return m * cplx(1.0 / two_pi, 0.0);
}

double JointPhaseFourier::operator()(double phi_plus, double phi_minus) const {
    const double osc =
        2.0 * std::real(c_plus * std::polar(1.0, phi_plus)) +
        2.0 * std::real(c_minus * std::polar(1.0, phi_minus));
    return (1.0 + gamma_a * gamma_b * osc) / (two_pi * two_pi);
}

JointPhaseFourier joint_distribution(const QuantumState& s, double gamma_a, double gamma_b) {
    phase_povm(gamma_a);
    phase_povm(gamma_b);
    const CMat rho = s.density_matrix();
    if (rho.dim() != 4)
        throw std::invalid_argument("joint_distribution: two-qubit state required");
    return {rho(0, 3), rho(1, 2), gamma_a, gamma_b};
}

}  // namespace qphase
