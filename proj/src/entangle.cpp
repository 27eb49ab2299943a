#include "qphase/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qphase/qubit_phase.hpp"

namespace qphase {

namespace {

// Multiply v by the phase that makes its first component of magnitude > tol
// real nonnegative; returns the conjugate factor applied.
cplx fix_leading_phase(CVec& v) {
    for (auto& entry : v) {
        if (std::abs(entry) > 1e-14) {
            const cplx ph = entry / std::abs(entry);
            for (auto& e : v) e /= ph;
            return ph;
        }
    }
    return 1.0;
}

}  // namespace

CVec SchmidtForm::reconstruct() const {
    CVec acc(4, 0.0);
    for (int k = 0; k < 2; ++k) {
        const double kap = k == 0 ? kappa1 : kappa2;
        const CVec term = kron_vec(basis_a[k], basis_b[k]);
        for (int i = 0; i < 4; ++i) acc[i] += kap * term[i];
    }
    return acc;
}

SchmidtForm schmidt_decompose(const QuantumState& s) {
    if (!s.is_pure() || s.qubits() != 2)
        throw std::invalid_argument("schmidt_decompose: pure two-qubit state required");
    const CVec& amp = s.amplitudes();

    // 2x2 coefficient matrix, A row index, B column index.
    CMat c(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c(i, j) = amp[i * 2 + j];

    const CMat gram = c.adjoint() * c;  // Hermitian PSD, eigenvalues kappa^2
    const auto eig = hermitian_eigen(gram);

    SchmidtForm form;
    form.kappa1 = std::sqrt(std::max(0.0, eig[0].value));
    form.kappa2 = std::sqrt(std::max(0.0, eig[1].value));

    for (int k = 0; k < 2; ++k) {
        const double sigma = k == 0 ? form.kappa1 : form.kappa2;
        const CVec& v = eig[k].vector;
        CVec x(2), y{std::conj(v[0]), std::conj(v[1])};
        if (sigma > 1e-14) {
            const CVec cv = qphase::apply(c, v);
            x = {cv[0] / sigma, cv[1] / sigma};
        } else {
            // Null singular value: complete the A basis orthogonally.
            const CVec& u1 = form.basis_a[0];
            x = {-std::conj(u1[1]), std::conj(u1[0])};
        }
        // Phase freedom per Schmidt term: make the A vector's leading
        // component real nonnegative and let the B vector absorb it,
        // keeping the reconstruction exact.
        const cplx ph = fix_leading_phase(x);
        if (sigma > 1e-14)
            for (auto& e : y) e *= ph;
        form.basis_a[k] = std::move(x);
        form.basis_b[k] = std::move(y);
    }
    return form;
}

std::pair<cplx, cplx> joint_phase_coefficients(const QuantumState& s) {
    const CMat rho = s.density_matrix();
    if (rho.dim() != 4)
        throw std::invalid_argument("joint_phase_coefficients: two-qubit state required");
    return {rho(0, 3), rho(1, 2)};
}

std::pair<double, double> sum_diff_dispersions(const QuantumState& s, double gamma_a,
                                               double gamma_b) {
    const auto joint = joint_distribution(s, gamma_a, gamma_b);
    const double g2 = gamma_a * gamma_a * gamma_b * gamma_b;
    return {1.0 - g2 * std::norm(joint.c_plus), 1.0 - g2 * std::norm(joint.c_minus)};
}

EntanglementReport entanglement_degree(const QuantumState& s, double gamma_a,
                                       double gamma_b) {
    const auto joint = joint_distribution(s, gamma_a, gamma_b);
    const auto [d_plus, d_minus] = sum_diff_dispersions(s, gamma_a, gamma_b);
    // |D+ - D-| / Gamma with the (gamma_a gamma_b)^2 factor cancelled
    // analytically, so the result is gamma-independent to the last bit.
    const double degree =
        4.0 * std::abs(std::norm(joint.c_plus) - std::norm(joint.c_minus));
    return {d_plus,  d_minus,        degree,        gamma_a,
            gamma_b, concurrence(s), joint.c_plus, joint.c_minus};
}

std::array<QuantumState, 4> bell_states() {
    const double r = 1.0 / std::sqrt(2.0);
    return {QuantumState::pure({r, 0.0, 0.0, r}),    // Phi+
            QuantumState::pure({r, 0.0, 0.0, -r}),   // Phi-
            QuantumState::pure({0.0, r, r, 0.0}),    // Psi+
            QuantumState::pure({0.0, r, -r, 0.0})};  // Psi-
}

std::pair<QuantumState, double> epsilon_family(double epsilon, int sign) {
    if (epsilon < 0.0 || epsilon > 1.0)
        throw std::invalid_argument("epsilon_family: epsilon must lie in [0, 1]");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("epsilon_family: sign must be +1 or -1");
    const double n2 = epsilon * epsilon + (1.0 - epsilon) * (1.0 - epsilon);
    const double n = std::sqrt(n2);
    const double r = 1.0 / std::sqrt(2.0);
    QuantumState state = QuantumState::pure(
        {r * epsilon / n, 0.0, r * (1.0 - epsilon) / n, sign * r});
    return {std::move(state), epsilon * epsilon / n2};
}

MaxEntReport is_maximally_entangled(const QuantumState& s) {
    if (!s.is_pure() || s.qubits() != 2)
        throw std::invalid_argument("is_maximally_entangled: pure two-qubit state required");
    const CMat rho = s.density_matrix();
    const CMat half = CMat::identity(2) * cplx(0.5, 0.0);
    const double ra = max_abs_diff(partial_trace(rho, Subsystem::A), half);
    const double rb = max_abs_diff(partial_trace(rho, Subsystem::B), half);
    return {ra <= 1e-10 && rb <= 1e-10, ra, rb};
}

double concurrence(const QuantumState& s) {
    if (s.qubits() != 2) throw std::invalid_argument("concurrence: two-qubit state required");

    if (s.is_pure()) {
        // 2 |det C| of the coefficient matrix; exact, unlike the generic
        // route below whose spurious zero eigenvalues cost sqrt(eps).
        const CVec& a = s.amplitudes();
        return std::clamp(2.0 * std::abs(a[0] * a[3] - a[1] * a[2]), 0.0, 1.0);
    }

    const CMat rho = s.density_matrix();

    const auto l = ladder();
    const CMat sigma_y = (l.s_plus - l.s_minus) * cplx(0.0, -1.0);
    const CMat yy = kron(sigma_y, sigma_y);
    const CMat rho_tilde = yy * rho.conj() * yy;

    // Spectrum of rho * rho_tilde via the similar Hermitian form
    // sqrt(rho) rho_tilde sqrt(rho).
    const CMat root = hermitian_sqrt((rho + rho.adjoint()) * cplx(0.5, 0.0));
    const CMat h = root * rho_tilde * root;
    const auto eig = hermitian_eigen((h + h.adjoint()) * cplx(0.5, 0.0));

    double c = 0.0;
    for (size_t i = 0; i < eig.size(); ++i) {
        const double lambda = std::sqrt(std::max(0.0, eig[i].value));
        c += i == 0 ? lambda : -lambda;
    }
    return std::clamp(c, 0.0, 1.0);
}

}  // namespace qphase
