#include "qphase/povm.hpp"

#include <cmath>
#include <stdexcept>

#include "qphase/qubit_phase.hpp"

namespace qphase {

PhasePovm phase_povm(double gamma) {
    if (!(gamma > 0.0) || gamma > 1.0)
        throw std::invalid_argument("phase_povm: gamma must lie in (0, 1]");
    return {gamma};
}

CMat povm_element(const PhasePovm& p, double phi) {
    if (!(p.gamma > 0.0) || p.gamma > 1.0)
        throw std::invalid_argument("povm_element: gamma must lie in (0, 1]");
    const auto l = ladder();
    const cplx g = p.gamma * std::polar(1.0, phi);
    CMat m = l.identity + l.s_plus * g + l.s_minus * std::conj(g);
    return m * cplx(1.0 / two_pi, 0.0);
}

PhaseFourier phase_distribution(const QuantumState& s, const PhasePovm& p) {
    const CMat rho = s.density_matrix();
    if (rho.dim() != 2)
        throw std::invalid_argument("phase_distribution: one-qubit state required");
    return {p.gamma * rho(0, 1), p.gamma};
}

Dispersion dispersion(const PhaseFourier& d) {
    const double d2 = 1.0 - std::norm(d.c);
    return {std::sqrt(std::max(0.0, d2)), d2};
}

std::pair<double, double> moments_from_distribution(const PhaseFourier& d) {
    if (d.gamma == 0.0)
        throw std::invalid_argument("moments_from_distribution: gamma must be nonzero");
    return {std::real(d.c) / d.gamma, std::imag(d.c) / d.gamma};
}

cplx reconstruct_from_three_points(double p0, double p1, double p_neg1) {
    const double phi1 = two_pi / 3.0;
    return (two_pi / 3.0) *
           (p0 + p1 * std::polar(1.0, -phi1) + p_neg1 * std::polar(1.0, phi1));
}

double three_point_evaluate(double p0, double p1, double p_neg1, double phi) {
    const double pr[3] = {p0, p1, p_neg1};
    const double phir[3] = {0.0, two_pi / 3.0, -two_pi / 3.0};
    cplx acc = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int s = -1; s <= 1; ++s)
            acc += pr[r] * std::polar(1.0, s * (phi - phir[r]));
    return std::real(acc) / 3.0;
}

std::function<CMat(double)> povm_convert(double target_gamma, const PhasePovm& source,
                                         int nodes) {
    if (!(target_gamma > 0.0) || target_gamma > 1.0)
        throw std::invalid_argument("povm_convert: target gamma must lie in (0, 1]");
    const double ratio = target_gamma / source.gamma;
    const PhasePovm src = source;
    return [ratio, src, nodes](double phi) {
        CMat acc(2);
        const double h = two_pi / nodes;
        for (int i = 0; i < nodes; ++i) {
            const double phip = i * h;
            const double kernel_re = 1.0;
            const cplx shift = ratio * std::polar(1.0, phi - phip);
            const double kernel = kernel_re + 2.0 * std::real(shift);
            acc += povm_element(src, phip) * cplx(kernel * h, 0.0);
        }
        return acc * cplx(1.0 / two_pi, 0.0);
    };
}

TruncatedFourier fourier_truncate(const std::function<double(double)>& f, int nodes) {
    auto coeff = [&](int k) {
        return periodic_quadrature(
            [&](double phi) { return f(phi) * std::polar(1.0, k * phi); }, nodes);
    };
    return {coeff(-1), coeff(0), coeff(1)};
}

double expectation_three_point(const std::function<double(double)>& f, const PhaseFourier& d,
                               int nodes) {
    const TruncatedFourier ft = fourier_truncate(f, nodes);
    const double phir[3] = {0.0, two_pi / 3.0, -two_pi / 3.0};
    double acc = 0.0;
    for (double phi : phir) acc += ft(phi) * d(phi);
    return acc * two_pi / 3.0;
}

PhasePovm sg_povm() { return {1.0}; }

double q_function(const QuantumState& s, double theta, double phi) {
    if (theta < 0.0 || theta > std::numbers::pi)
        throw std::invalid_argument("q_function: theta must lie in [0, pi]");
    const CMat rho = s.density_matrix();
    if (rho.dim() != 2) throw std::invalid_argument("q_function: one-qubit state required");
    const CVec coh = bloch_state(theta, phi).amplitudes();
    return std::real((rho * outer(coh)).trace()) / two_pi;
}

CMat q_povm_element(double phi, int nodes) {
    if (nodes < 64) throw std::invalid_argument("q_povm_element: need at least 64 nodes");
    const auto rule = gauss_legendre(nodes, 0.0, std::numbers::pi);
    CMat acc(2);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double theta = rule.nodes[i];
        const CVec coh = bloch_state(theta, phi).amplitudes();
        acc += outer(coh) * cplx(std::sin(theta) * rule.weights[i], 0.0);
    }
    return acc * cplx(1.0 / two_pi, 0.0);
}

}  // namespace qphase
