#pragma once

#include <functional>

#include "qphase/core.hpp"
#include "qphase/povm.hpp"

namespace qphase {

/// Phase-sum/difference operators for two qubits.
/// v is built as -exp(i pi S_(+)), which realizes the (-1)^v action
/// on the cast basis and commutes with e_plus and e_minus.
struct SumDiffOperators {
    CMat e_plus{4};    // E_A E_B
    CMat e_minus{4};   // E_A adj(E_B)
    CMat s_plus_z{4};  // S_zA + S_zB
    CMat s_minus_z{4}; // S_zA - S_zB
    CMat v{4};
};

SumDiffOperators build_sum_diff();

/// |phi_A> (x) |phi_B> with |phi> = (|0> + e^{i phi}|1>)/sqrt(2 pi).
CVec sg_product_state(double phi_a, double phi_b);

/// Member of the v-labelled joint eigenbasis, Eq.-(def)-style two-branch
/// combination; not unit-normalized (continuous basis normalization).
struct CastBasisState {
    double phi_plus;
    double phi_minus;
    int v;
    CVec vector;
};

CastBasisState cast_basis_state(double phi_plus, double phi_minus, int v);

/// Two-branch casting of a distribution on (phi_A, phi_B) to (phi_+, phi_-).
std::function<double(double, double)> cast_distribution(
    std::function<double(double, double)> p);

/// Lambda(phi_+, phi_-): cast of Delta_{gamma_A} (x) Delta_{gamma_B}.
std::function<CMat(double, double)> cast_povm(double gamma_a, double gamma_b);

/// Marginal phase-difference POVM
/// Lambda(phi_-) = int dphi' Delta_{gamma_A}(phi_- + phi') (x) Delta_{gamma_B}(phi').
CMat marginal_diff_povm(double gamma_a, double gamma_b, double phi_minus);

/// Cast joint distribution in band-limited form:
/// P(phi_+, phi_-) = (1/4pi^2)[1 + gA gB (c+ e^{i phi+} + c.c. + c- e^{i phi-} + c.c.)],
/// c+ = <00|rho|11>, c- = <01|rho|10>.
struct JointPhaseFourier {
    cplx c_plus;
    cplx c_minus;
    double gamma_a;
    double gamma_b;

    double operator()(double phi_plus, double phi_minus) const;
};

JointPhaseFourier joint_distribution(const QuantumState& s, double gamma_a, double gamma_b);

}  // namespace qphase
