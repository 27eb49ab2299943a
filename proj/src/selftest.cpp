#include "qphase/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "qphase/entangle.hpp"
#include "qphase/povm.hpp"
#include "qphase/quadrature.hpp"
#include "qphase/qubit_phase.hpp"
#include "qphase/random_states.hpp"
#include "qphase/twoqubit.hpp"

namespace qphase {

namespace {

constexpr double pi = std::numbers::pi;

CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

struct Collector {
    SelfTestReport& report;
    std::string suite;

    void add(const std::string& name, double residual, double tolerance) {
        report.checks.push_back({suite, name, residual, tolerance,
                                 residual <= tolerance});
    }
};

void core_suite(SelfTestReport& rep, RandomStateGen& gen) {
    Collector c{rep, "core"};

    double kron_trace = 0.0, ptrace_factor = 0.0;
    for (int i = 0; i < 100; ++i) {
        CMat a(2), b(2);
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s) {
                a(r, s) = gen.gaussian();
                b(r, s) = gen.gaussian();
            }
        const CMat k = kron(a, b);
        kron_trace = std::max(kron_trace,
                              std::abs(k.trace() - a.trace() * b.trace()));
        ptrace_factor = std::max(
            ptrace_factor,
            max_abs_diff(partial_trace(k, Subsystem::A), a * b.trace()));
    }
    c.add("kron_trace_multiplicative", kron_trace, 1e-12);
    c.add("partial_trace_factorizes", ptrace_factor, 1e-12);

    double trace_sum = 0.0, recon = 0.0, ortho = 0.0;
    for (int i = 0; i < 100; ++i) {
        const CMat h = gen.random_hermitian(i % 2 ? 2 : 4);
        const auto eig = hermitian_eigen(h);
        double sum = 0.0;
        CMat back(h.dim());
        for (const auto& [lambda, vec] : eig) {
            sum += lambda;
            back += outer(vec) * cplx(lambda, 0.0);
        }
        trace_sum = std::max(trace_sum, std::abs(sum - std::real(h.trace())));
        recon = std::max(recon, max_abs_diff(back, h));
        for (size_t a = 0; a < eig.size(); ++a)
            for (size_t b = 0; b < eig.size(); ++b) {
                const double expect = a == b ? 1.0 : 0.0;
                ortho = std::max(ortho,
                                 std::abs(std::abs(dot(eig[a].vector, eig[b].vector)) - expect));
            }
    }
    c.add("eigen_trace_sum", trace_sum, 1e-10);
    c.add("eigen_reconstruction", recon, 1e-9);
    c.add("eigen_orthonormal", ortho, 1e-10);
}

void qubit_phase_suite(SelfTestReport& rep, RandomStateGen& gen) {
    Collector c{rep, "qubit_phase"};
    const auto l = ladder();

    c.add("ccr_sz_splus",
          max_abs_diff(commutator(l.s_z, l.s_plus), l.s_plus), 1e-14);
    c.add("ccr_sz_sminus",
          max_abs_diff(commutator(l.s_z, l.s_minus), l.s_minus * cplx(-1.0, 0.0)), 1e-14);
    c.add("ccr_splus_sminus",
          max_abs_diff(commutator(l.s_plus, l.s_minus), l.s_z * cplx(2.0, 0.0)), 1e-14);

    const CMat root = hermitian_sqrt(l.s_minus * l.s_plus);
    double polar = 0.0, unitary = 0.0;
    for (double phi0 : {0.0, 1.0, pi, 4.5, gen.uniform(0.0, two_pi)}) {
        const CMat e = phase_exponential(phi0).e_operator;
        polar = std::max(polar, max_abs_diff(l.s_minus, root * e));
        unitary = std::max(unitary, max_abs_diff(e * e.adjoint(), l.identity));
    }
    c.add("polar_decomposition", polar, 1e-12);
    c.add("e_unitary", unitary, 1e-12);

    const CMat e = phase_exponential().e_operator;
    c.add("e_squared_minus_identity",
          max_abs_diff(e * e, l.identity * cplx(-1.0, 0.0)), 1e-14);
    c.add("e_antihermitian", max_abs_diff(e.adjoint(), e * cplx(-1.0, 0.0)), 1e-14);
    c.add("cos_phase_operator_vanishes",
          phase_operator_function([](double x) { return std::cos(x); }).max_abs(), 1e-14);

    double s_minus_mean = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double theta = gen.uniform(0.0, pi);
        const double phi = gen.uniform(0.0, two_pi);
        const CVec psi = bloch_state(theta, phi).amplitudes();
        const cplx got = dot(psi, apply(l.s_minus, psi));
        const cplx expect = 0.5 * std::sin(theta) * std::polar(1.0, phi);
        s_minus_mean = std::max(s_minus_mean, std::abs(got - expect));
    }
    c.add("s_minus_expectation_polar_form", s_minus_mean, 1e-12);

    double sum_res = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto [p, m] =
            hermitian_phase_distribution(QuantumState::density(gen.random_density(2)));
        sum_res = std::max(sum_res, std::abs(p + m - 1.0));
    }
    c.add("two_point_distribution_normalized", sum_res, 1e-12);
}

void povm_suite(SelfTestReport& rep, RandomStateGen& gen) {
    Collector c{rep, "povm"};
    const double gammas[] = {0.1, 0.5, pi / 4.0, 1.0};

    double herm = 0.0, positivity = 0.0, completeness = 0.0;
    for (double g : gammas) {
        const PhasePovm p{g};
        for (int i = 0; i < 256; ++i) {
            const CMat d = povm_element(p, i * two_pi / 256);
            herm = std::max(herm, max_abs_diff(d, d.adjoint()));
            positivity = std::max(positivity, -min_eigenvalue(d));
        }
        const CMat total = periodic_quadrature(
            [&](double phi) { return povm_element(p, phi); }, 2048);
        completeness = std::max(completeness, max_abs_diff(total, CMat::identity(2)));
    }
    c.add("axiom_hermiticity", herm, 0.0);
    c.add("axiom_positivity", std::max(0.0, positivity), 1e-12);
    c.add("axiom_completeness", completeness, 1e-9);

    const auto l = ladder();
    double covariance = 0.0, complementarity = 0.0;
    const CMat e = phase_exponential().e_operator;
    for (double g : gammas) {
        const PhasePovm p{g};
        for (int i = 0; i < 16; ++i) {
            const double phi = gen.uniform(0.0, two_pi);
            const double shift = gen.uniform(0.0, two_pi);
            CMat u(2);
            u(0, 0) = std::polar(1.0, shift * std::real(l.s_z(0, 0)));
            u(1, 1) = std::polar(1.0, shift * std::real(l.s_z(1, 1)));
            covariance = std::max(
                covariance, max_abs_diff(u * povm_element(p, phi) * u.adjoint(),
                                         povm_element(p, phi + shift)));
            // For the qubit, conjugation by E maps the family onto itself by
            // the reflection phi -> phi0 - phi, which leaves every phase
            // dispersion and the outcome set unchanged.
            complementarity = std::max(
                complementarity,
                max_abs_diff(e * povm_element(p, phi) * e.adjoint(),
                             povm_element(p, pi - phi)));
        }
    }
    c.add("covariance_phase_shifter", covariance, 1e-12);
    c.add("complementarity_family_reflection", complementarity, 1e-12);

    double ordering_violation = 0.0, roundtrip = 0.0, nonneg = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const QuantumState s = QuantumState::density(gen.random_density(2));
        double g1 = gen.uniform(0.01, 1.0), g2 = gen.uniform(0.01, 1.0);
        if (g1 > g2) std::swap(g1, g2);
        const double d1 = dispersion(phase_distribution(s, {g1})).d;
        const double d2 = dispersion(phase_distribution(s, {g2})).d;
        ordering_violation = std::max(ordering_violation, d2 - d1);

        const auto pf = phase_distribution(s, {g2});
        const cplx rec = reconstruct_from_three_points(pf(0.0), pf(two_pi / 3.0),
                                                       pf(-two_pi / 3.0));
        roundtrip = std::max(roundtrip, std::abs(rec - pf.c));
        for (int k = 0; k < 16; ++k) nonneg = std::max(nonneg, -pf(k * two_pi / 16));
    }
    c.add("dispersion_ordering", ordering_violation, 1e-14);
    c.add("three_point_roundtrip", roundtrip, 1e-13);
    c.add("distribution_nonnegative", std::max(0.0, nonneg), 1e-12);

    double moments = 0.0;
    for (int i = 0; i < 100; ++i) {
        const QuantumState s = QuantumState::density(gen.random_density(2));
        const double g = gen.uniform(0.05, 1.0);
        const auto [sx, sy] = moments_from_distribution(phase_distribution(s, {g}));
        const CMat rho = s.density_matrix();
        const double tx = std::real((rho * ((l.s_plus + l.s_minus) * cplx(0.5, 0.0))).trace());
        const double ty = std::real(
            (rho * ((l.s_plus - l.s_minus) * cplx(0.0, -0.5))).trace());
        moments = std::max({moments, std::abs(sx - tx), std::abs(sy - ty)});
    }
    c.add("moments_match_traces", moments, 1e-12);

    double convert = 0.0;
    const double pairs[][2] = {{0.3, 0.6}, {pi / 4.0, 1.0}, {1.0, 1.0}, {0.9, 0.2}};
    for (const auto& pr : pairs) {
        const auto conv = povm_convert(pr[0], {pr[1]});
        for (int k = 0; k < 4; ++k) {
            const double phi = gen.uniform(0.0, two_pi);
            convert = std::max(convert,
                               max_abs_diff(conv(phi), povm_element({pr[0]}, phi)));
        }
    }
    c.add("povm_conversion_kernel", convert, 1e-9);

    double q_match = 0.0;
    for (int k = 0; k < 16; ++k) {
        const double phi = k * two_pi / 16;
        q_match = std::max(q_match,
                           max_abs_diff(q_povm_element(phi), povm_element({pi / 4.0}, phi)));
    }
    c.add("q_povm_equals_gamma_pi_over_4", q_match, 1e-9);

    double trunc = 0.0;
    const auto ft = fourier_truncate([](double x) { return std::cos(2.0 * x); });
    for (int k = 0; k < 8; ++k) trunc = std::max(trunc, std::abs(ft(k * two_pi / 8)));
    c.add("truncation_kills_high_harmonics", trunc, 1e-10);
}

void twoqubit_suite(SelfTestReport& rep, RandomStateGen& gen) {
    Collector c{rep, "twoqubit"};
    const auto ops = build_sum_diff();

    c.add("v_squared_identity", max_abs_diff(ops.v * ops.v, CMat::identity(4)), 1e-14);
    c.add("e_plus_commutes_v", commutator(ops.e_plus, ops.v).max_abs(), 1e-14);
    c.add("e_minus_commutes_v", commutator(ops.e_minus, ops.v).max_abs(), 1e-14);

    double v_action = 0.0, reparam = 0.0;
    for (int i = 0; i < 32; ++i) {
        const double pp = gen.uniform(0.0, two_pi);
        const double pm = gen.uniform(0.0, two_pi);
        for (int v = 0; v < 2; ++v) {
            const auto basis = cast_basis_state(pp, pm, v);
            const CVec va = apply(ops.v, basis.vector);
            const double sign = v == 0 ? 1.0 : -1.0;
            for (int k = 0; k < 4; ++k)
                v_action = std::max(v_action, std::abs(va[k] - sign * basis.vector[k]));
            // (phi_A, phi_B) -> (phi_A + pi, phi_B + pi) maps to the same
            // (phi_+, phi_-); shifting phi_+ by 2 pi realizes it.
            const auto shifted = cast_basis_state(pp + 2.0 * pi, pm, v);
            for (int k = 0; k < 4; ++k)
                reparam = std::max(reparam, std::abs(shifted.vector[k] - basis.vector[k]));
        }
    }
    c.add("v_eigenvalue_action", v_action, 1e-12);
    c.add("reparametrization_invariance", reparam, 1e-12);

    CMat identity_sum(4);
    const int n = 128;
    const double h = two_pi / n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int v = 0; v < 2; ++v)
                identity_sum += outer(cast_basis_state(i * h, j * h, v).vector) *
                                cplx(h * h, 0.0);
    c.add("v_basis_resolution_of_identity",
          max_abs_diff(identity_sum, CMat::identity(4)), 1e-6);

    double half_harmonic = 0.0, cast_match = 0.0, moment_eq = 0.0;
    for (int i = 0; i < 100; ++i) {
        const QuantumState s = QuantumState::density(gen.random_density(4));
        const double ga = gen.uniform(0.05, 1.0), gb = gen.uniform(0.05, 1.0);
        const CMat rho = s.density_matrix();
        const auto grid_p = [&](double a, double b) {
            return std::real(
                (rho * kron(povm_element({ga}, a), povm_element({gb}, b))).trace());
        };
        const auto cast = cast_distribution(grid_p);
        const auto joint = joint_distribution(s, ga, gb);

        // Symbolic vs grid casting.
        for (int k = 0; k < 8; ++k) {
            const double pp = gen.uniform(0.0, two_pi), pm = gen.uniform(0.0, two_pi);
            cast_match = std::max(cast_match, std::abs(cast(pp, pm) - joint(pp, pm)));
        }

        // Half-harmonic Fourier weight over the doubled window vanishes.
        const int m = 16;
        const double hh = 2.0 * two_pi / m;
        for (int ks = -1; ks <= 1; ks += 2)
            for (int ls = -1; ls <= 1; ls += 2) {
                cplx acc = 0.0;
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b)
                        acc += cast(a * hh, b * hh) *
                               std::polar(1.0, 0.5 * (ks * a * hh + ls * b * hh));
                half_harmonic = std::max(half_harmonic,
                                         std::abs(acc) * hh * hh / (two_pi * two_pi));
            }

        // Fourier-moment equality for k, l in {0, +-1}.
        if (i < 20) {
            const int q = 16;
            const double hq = two_pi / q;
            for (int k = -1; k <= 1; ++k)
                for (int lharm = -1; lharm <= 1; ++lharm) {
                    cplx lhs = 0.0, rhs = 0.0;
                    for (int a = 0; a < q; ++a)
                        for (int b = 0; b < q; ++b) {
                            lhs += cast(a * hq, b * hq) *
                                   std::polar(1.0, k * a * hq + lharm * b * hq);
                            rhs += grid_p(a * hq, b * hq) *
                                   std::polar(1.0, k * (a * hq + b * hq) +
                                                       lharm * (a * hq - b * hq));
                        }
                    moment_eq = std::max(moment_eq, std::abs(lhs - rhs) * hq * hq);
                }
        }
    }
    c.add("symbolic_vs_grid_casting", cast_match, 1e-10);
    c.add("half_harmonic_cancellation", half_harmonic, 1e-10);
    c.add("fourier_moment_equality", moment_eq, 1e-9);

    double marginal = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double ga = gen.uniform(0.1, 1.0), gb = gen.uniform(0.1, 1.0);
        const double pm = gen.uniform(0.0, two_pi);
        const auto lam = cast_povm(ga, gb);
        const CMat integrated = periodic_quadrature(
            [&](double pp) { return lam(pp, pm); }, 256);
        marginal = std::max(marginal,
                            max_abs_diff(integrated, marginal_diff_povm(ga, gb, pm)));
    }
    c.add("marginal_diff_povm_quadrature", marginal, 1e-9);
}

void entangle_suite(SelfTestReport& rep, RandomStateGen& gen) {
    Collector c{rep, "entangle"};

    double bell_res = 0.0;
    for (const auto& bell : bell_states())
        bell_res = std::max(bell_res,
                            std::abs(entanglement_degree(bell, 1.0, 1.0).degree - 1.0));
    c.add("bell_degree_one", bell_res, 1e-12);

    const double gamma_grid[] = {0.1, 0.25, 0.5, pi / 4.0, 1.0};
    double gamma_inv = 0.0;
    for (int i = 0; i < 100; ++i) {
        const QuantumState s = i % 2 ? gen.random_pure_state(2)
                                     : QuantumState::density(gen.random_density(4));
        const double base = entanglement_degree(s, 1.0, 1.0).degree;
        for (double ga : gamma_grid)
            for (double gb : gamma_grid)
                gamma_inv = std::max(
                    gamma_inv, std::abs(entanglement_degree(s, ga, gb).degree - base));
    }
    c.add("degree_gamma_invariant", gamma_inv, 1e-12);

    double range = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const QuantumState s = i % 2 ? gen.random_pure_state(2)
                                     : QuantumState::density(gen.random_density(4, 3));
        const double d = entanglement_degree(s, 1.0, 1.0).degree;
        range = std::max({range, -d, d - 1.0});
    }
    c.add("degree_in_unit_interval", std::max(0.0, range), 1e-12);

    double product = 0.0;
    for (int i = 0; i < 1000; ++i)
        product = std::max(
            product, entanglement_degree(gen.random_product_state(), 1.0, 1.0).degree);
    c.add("product_state_degree_zero", product, 1e-12);

    double disp_oracle = 0.0;
    for (int i = 0; i < 20; ++i) {
        const QuantumState s = QuantumState::density(gen.random_density(4));
        const double ga = gen.uniform(0.1, 1.0), gb = gen.uniform(0.1, 1.0);
        const auto [dp, dm] = sum_diff_dispersions(s, ga, gb);
        const auto [qp, qm] = dispersions_by_quadrature(s, ga, gb);
        disp_oracle = std::max({disp_oracle, std::abs(dp - qp), std::abs(dm - qm)});
    }
    c.add("dispersions_match_quadrature", disp_oracle, 1e-9);

    double eps_res = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double eps = i / 10.0;
        for (int sign : {1, -1}) {
            const auto [state, predicted] = epsilon_family(eps, sign);
            const auto report = entanglement_degree(state, 1.0, 1.0);
            eps_res = std::max(eps_res, std::abs(report.degree - predicted));
            eps_res = std::max(
                eps_res, std::abs(report.degree - report.concurrence * report.concurrence));
        }
    }
    c.add("epsilon_family_closed_form", eps_res, 1e-12);

    double schmidt_fid = 0.0, schmidt_norm = 0.0, conc_pure = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const QuantumState s = gen.random_pure_state(2);
        const auto form = schmidt_decompose(s);
        schmidt_norm = std::max(
            schmidt_norm,
            std::abs(form.kappa1 * form.kappa1 + form.kappa2 * form.kappa2 - 1.0));
        const double fid = std::abs(dot(s.amplitudes(), form.reconstruct()));
        schmidt_fid = std::max(schmidt_fid, 1.0 - fid);
        conc_pure = std::max(conc_pure, std::abs(concurrence(s) -
                                                 2.0 * form.kappa1 * form.kappa2));
    }
    c.add("schmidt_roundtrip_fidelity", schmidt_fid, 1e-12);
    c.add("schmidt_coefficients_normalized", schmidt_norm, 1e-12);
    c.add("concurrence_equals_2k1k2_pure", conc_pure, 1e-10);
}

}  // namespace

bool SelfTestReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const SelfTestCheck& c) { return c.pass; });
}

std::pair<double, double> dispersions_by_quadrature(const QuantumState& s, double gamma_a,
                                                    double gamma_b, int nodes) {
    const CMat rho = s.density_matrix();
    const auto lam = cast_povm(gamma_a, gamma_b);
    const double h = two_pi / nodes;
    cplx ip = 0.0, im = 0.0;
    for (int a = 0; a < nodes; ++a)
        for (int b = 0; b < nodes; ++b) {
            const double pp = a * h, pm = b * h;
            const double p = std::real((rho * lam(pp, pm)).trace());
            ip += p * std::polar(1.0, pp);
            im += p * std::polar(1.0, pm);
        }
    ip *= h * h;
    im *= h * h;
    return {1.0 - std::norm(ip), 1.0 - std::norm(im)};
}

SelfTestReport run_selftest(std::uint64_t seed) {
    SelfTestReport rep;
    rep.seed = seed;
    RandomStateGen gen(seed);

    const auto start = std::chrono::steady_clock::now();
    core_suite(rep, gen);
    qubit_phase_suite(rep, gen);
    povm_suite(rep, gen);
    twoqubit_suite(rep, gen);
    entangle_suite(rep, gen);
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace qphase
