#pragma once

#include <complex>
#include <functional>
#include <utility>

#include "qphase/core.hpp"
#include "qphase/quadrature.hpp"

namespace qphase {

/// Covariant phase POVM family Delta_gamma(phi), 0 < gamma <= 1.
struct PhasePovm {
    double gamma;
};

PhasePovm phase_povm(double gamma);

/// Delta_gamma(phi) = (1/2pi)(I + gamma e^{i phi} S+ + gamma e^{-i phi} S-).
CMat povm_element(const PhasePovm& p, double phi);

/// Band-limited phase distribution P(phi) = (1/2pi)(1 + c e^{i phi} + c* e^{-i phi});
/// the single coefficient c carries the state dependence exactly.
struct PhaseFourier {
    cplx c;
    double gamma;

    double operator()(double phi) const {
        return (1.0 + 2.0 * std::real(c * std::polar(1.0, phi))) / two_pi;
    }
};

/// c = gamma <0|rho|1>.
PhaseFourier phase_distribution(const QuantumState& s, const PhasePovm& p);

struct Dispersion {
    double d;
    double d2;  // 1 - |c|^2
};

Dispersion dispersion(const PhaseFourier& d);

/// (<Sx>, <Sy>) recovered from the distribution: (Re c / gamma, Im c / gamma).
std::pair<double, double> moments_from_distribution(const PhaseFourier& d);

/// c = (2pi/3) sum_{r=0,+-1} P(phi_r) e^{-i phi_r}, phi_r = 2 pi r / 3.
cplx reconstruct_from_three_points(double p0, double p1, double p_neg1);

/// P(phi) = (1/3) sum_{r,s} P(phi_r) e^{i s (phi - phi_r)}.
double three_point_evaluate(double p0, double p1, double p_neg1, double phi);

/// Kernel-integrated conversion from Delta_{gamma2} to Delta_{gamma1};
/// the returned evaluator matches povm_element(gamma1, phi) up to quadrature error.
std::function<CMat(double)> povm_convert(double target_gamma, const PhasePovm& source,
                                         int nodes = 2048);

/// Truncation of a 2pi-periodic function to harmonics |k| <= 1,
/// F_k = int e^{i k phi} f(phi) dphi.
struct TruncatedFourier {
    cplx f_neg1, f_0, f_pos1;

    double operator()(double phi) const {
        const cplx sum = f_neg1 * std::polar(1.0, phi) + f_0 +
                         f_pos1 * std::polar(1.0, -phi);
        return std::real(sum) / two_pi;
    }
};

TruncatedFourier fourier_truncate(const std::function<double(double)>& f, int nodes = 4096);

/// <F> = (2pi/3) sum_r F~(phi_r) P(phi_r).
double expectation_three_point(const std::function<double(double)>& f, const PhaseFourier& d,
                               int nodes = 4096);

/// Susskind-Glogower instance: gamma = 1, element |phi><phi| with
/// |phi> = (|0> + e^{i phi}|1>)/sqrt(2 pi).
PhasePovm sg_povm();

/// Q(theta, phi) = (1/2pi) <theta,phi| rho |theta,phi> over SU(2) coherent states.
double q_function(const QuantumState& s, double theta, double phi);

/// Delta_Q(phi) = (1/2pi) int_0^pi dtheta sin(theta) |theta,phi><theta,phi|,
/// evaluated by Gauss-Legendre quadrature; equals Delta_{gamma = pi/4}(phi).
CMat q_povm_element(double phi, int nodes = 64);

}  // namespace qphase
