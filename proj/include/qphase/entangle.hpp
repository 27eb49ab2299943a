#pragma once

#include <array>
#include <utility>

#include "qphase/core.hpp"
#include "qphase/twoqubit.hpp"

namespace qphase {

/// |Psi> = kappa1 |x1,y1> + kappa2 |x2,y2>, kappa1 >= kappa2 >= 0,
/// kappa1^2 + kappa2^2 = 1; each local basis orthonormal.
struct SchmidtForm {
    double kappa1;
    double kappa2;
    std::array<CVec, 2> basis_a;
    std::array<CVec, 2> basis_b;

    CVec reconstruct() const;
};

/// SVD of the 2x2 coefficient matrix of a pure two-qubit state.
SchmidtForm schmidt_decompose(const QuantumState& s);

/// (C+, C-) = (<00|rho|11>, <01|rho|10>).
std::pair<cplx, cplx> joint_phase_coefficients(const QuantumState& s);

/// Closed forms D+- = 1 - (gA gB)^2 |C+-|^2.
std::pair<double, double> sum_diff_dispersions(const QuantumState& s, double gamma_a,
                                               double gamma_b);

struct EntanglementReport {
    double d_plus;
    double d_minus;
    double degree;
    double gamma_a;
    double gamma_b;
    double concurrence;
    cplx c_plus;
    cplx c_minus;
};

/// Degree of entanglement |D+ - D-| / Gamma with Gamma = (gA gB / 2)^2;
/// the gamma dependence cancels exactly.
EntanglementReport entanglement_degree(const QuantumState& s, double gamma_a, double gamma_b);

/// Order: Phi+, Phi-, Psi+, Psi-.
std::array<QuantumState, 4> bell_states();

/// |Phi_eps^sign> and its predicted degree eps^2 / N^2, N^2 = eps^2 + (1-eps)^2.
std::pair<QuantumState, double> epsilon_family(double epsilon, int sign);

struct MaxEntReport {
    bool maximal;
    double residual_a;  // || Tr_B rho - I/2 ||_max
    double residual_b;  // || Tr_A rho - I/2 ||_max
};

MaxEntReport is_maximally_entangled(const QuantumState& s);

/// Wootters concurrence; independent oracle for the degree.
double concurrence(const QuantumState& s);

}  // namespace qphase
