#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qphase/core.hpp"
#include "qphase/entangle.hpp"
#include "qphase/random_states.hpp"
#include "qphase/selftest.hpp"
#include "test_util.hpp"

using namespace qphase;
using qtest::check_close;
using std::numbers::pi;

namespace {
const double r2 = 1.0 / std::sqrt(2.0);

// (H (x) I)|Phi+> = (|00> + |10> + |01> - |11>)/2: maximally entangled in
// the Schmidt sense, yet with C+ = -1/4 and C- = 1/4, so the degree
// vanishes while the concurrence stays 1 (the measure is basis dependent).
const QuantumState hadamard_phi_plus =
    QuantumState::pure({0.5, 0.5, 0.5, -0.5});
}  // namespace

TEST_CASE("Schmidt decomposition examples") {
    const auto bell = schmidt_decompose(bell_states()[0]);
    CHECK(bell.kappa1 == doctest::Approx(r2).epsilon(1e-12));
    CHECK(bell.kappa2 == doctest::Approx(r2).epsilon(1e-12));

    const auto product = schmidt_decompose(QuantumState::pure({1.0, 0.0, 0.0, 0.0}));
    CHECK(product.kappa1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(product.kappa2) <= 1e-12);

    CHECK_THROWS_AS(schmidt_decompose(QuantumState::density(
                        CMat::identity(4) * cplx(0.25, 0.0))),
                    std::invalid_argument);
}

TEST_CASE("Schmidt decomposition properties on random states") {
    RandomStateGen gen(41);
    for (int i = 0; i < 500; ++i) {
        const QuantumState s = gen.random_pure_state(2);
        const auto form = schmidt_decompose(s);
        CHECK(form.kappa1 >= form.kappa2);
        CHECK(form.kappa2 >= 0.0);
        CHECK(form.kappa1 * form.kappa1 + form.kappa2 * form.kappa2 ==
              doctest::Approx(1.0).epsilon(1e-12));

        CHECK(std::abs(dot(form.basis_a[0], form.basis_a[1])) <= 1e-12);
        CHECK(std::abs(dot(form.basis_b[0], form.basis_b[1])) <= 1e-12);
        for (int k = 0; k < 2; ++k) {
            CHECK(norm(form.basis_a[k]) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(norm(form.basis_b[k]) == doctest::Approx(1.0).epsilon(1e-12));
        }

        const double fidelity = std::abs(dot(s.amplitudes(), form.reconstruct()));
        CHECK(fidelity >= 1.0 - 1e-12);
    }
}

TEST_CASE("joint phase coefficients") {
    const auto [cp_phi, cm_phi] = joint_phase_coefficients(bell_states()[0]);
    CHECK(std::abs(cp_phi - 0.5) <= 1e-14);
    CHECK(std::abs(cm_phi) <= 1e-14);

    const auto [cp_psi, cm_psi] = joint_phase_coefficients(bell_states()[2]);
    CHECK(std::abs(cp_psi) <= 1e-14);
    CHECK(std::abs(cm_psi - 0.5) <= 1e-14);

    // Product states always have |C+| = |C-|.
    RandomStateGen gen(43);
    for (int i = 0; i < 200; ++i) {
        const auto [cp, cm] = joint_phase_coefficients(gen.random_product_state());
        CHECK(std::abs(std::abs(cp) - std::abs(cm)) <= 1e-13);
    }
}

TEST_CASE("sum and difference dispersions") {
    const auto [dp, dm] = sum_diff_dispersions(bell_states()[0], 1.0, 1.0);
    CHECK(dp == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(dm == doctest::Approx(1.0).epsilon(1e-13));

    const auto [dp_m, dm_m] = sum_diff_dispersions(
        QuantumState::density(CMat::identity(4) * cplx(0.25, 0.0)), 0.5, 0.8);
    CHECK(dp_m == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dm_m == doctest::Approx(1.0).epsilon(1e-14));

    const auto [dp_00, dm_00] =
        sum_diff_dispersions(QuantumState::pure({1.0, 0.0, 0.0, 0.0}), 1.0, 1.0);
    CHECK(dp_00 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dm_00 == doctest::Approx(1.0).epsilon(1e-14));

    // Closed forms against brute-force quadrature of the cast distribution.
    RandomStateGen gen(45);
    for (int i = 0; i < 25; ++i) {
        const QuantumState s = QuantumState::density(gen.random_density(4));
        const double ga = gen.uniform(0.05, 1.0), gb = gen.uniform(0.05, 1.0);
        const auto [cp, cm] = sum_diff_dispersions(s, ga, gb);
        const auto [qp, qm] = dispersions_by_quadrature(s, ga, gb);
        CHECK(std::abs(cp - qp) <= 1e-9);
        CHECK(std::abs(cm - qm) <= 1e-9);
    }
}

TEST_CASE("entanglement degree") {
    for (const auto& bell : bell_states())
        CHECK(entanglement_degree(bell, 1.0, 1.0).degree ==
              doctest::Approx(1.0).epsilon(1e-13));

    CHECK(std::abs(entanglement_degree(QuantumState::pure({1.0, 0.0, 0.0, 0.0}), 1.0, 1.0)
                       .degree) <= 1e-14);

    const auto half = entanglement_degree(epsilon_family(0.5, 1).first, 1.0, 1.0);
    CHECK(half.degree == doctest::Approx(0.5).epsilon(1e-13));

    // Documented divergence from the concurrence: a local Hadamard kills
    // the degree but not the entanglement.
    const auto rotated = entanglement_degree(hadamard_phi_plus, 1.0, 1.0);
    CHECK(std::abs(rotated.degree) <= 1e-13);
    CHECK(rotated.concurrence == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(rotated.c_plus + 0.25) <= 1e-14);
    CHECK(std::abs(rotated.c_minus - 0.25) <= 1e-14);
    CHECK(is_maximally_entangled(hadamard_phi_plus).maximal);
}

TEST_CASE("degree is gamma independent and bounded") {
    RandomStateGen gen(47);
    const double grid[] = {0.1, 0.25, 0.5, pi / 4.0, 1.0};
    for (int i = 0; i < 100; ++i) {
        const QuantumState s = i % 2 ? gen.random_pure_state(2)
                                     : QuantumState::density(gen.random_density(4));
        const double base = entanglement_degree(s, 1.0, 1.0).degree;
        CHECK(base >= 0.0);
        CHECK(base <= 1.0 + 1e-12);
        for (double ga : grid)
            for (double gb : grid)
                CHECK(std::abs(entanglement_degree(s, ga, gb).degree - base) <= 1e-12);
    }
}

TEST_CASE("product states have zero degree") {
    RandomStateGen gen(49);
    for (int i = 0; i < 1000; ++i)
        CHECK(std::abs(entanglement_degree(gen.random_product_state(), 1.0, 1.0).degree) <=
              1e-12);
}

TEST_CASE("Bell states") {
    const auto bells = bell_states();
    check_close(bells[0].amplitudes(), {r2, 0.0, 0.0, r2}, 1e-15);
    check_close(bells[1].amplitudes(), {r2, 0.0, 0.0, -r2}, 1e-15);
    check_close(bells[2].amplitudes(), {0.0, r2, r2, 0.0}, 1e-15);
    check_close(bells[3].amplitudes(), {0.0, r2, -r2, 0.0}, 1e-15);

    for (size_t a = 0; a < 4; ++a) {
        CHECK(is_maximally_entangled(bells[a]).maximal);
        for (size_t b = 0; b < 4; ++b) {
            const double want = a == b ? 1.0 : 0.0;
            CHECK(std::abs(dot(bells[a].amplitudes(), bells[b].amplitudes()) - want) <=
                  1e-14);
        }
    }
}

TEST_CASE("epsilon family") {
    const auto [s1, p1] = epsilon_family(1.0, 1);
    CHECK(p1 == doctest::Approx(1.0));
    check_close(s1.amplitudes(), bell_states()[0].amplitudes(), 1e-14);

    const auto [s1m, p1m] = epsilon_family(1.0, -1);
    check_close(s1m.amplitudes(), bell_states()[1].amplitudes(), 1e-14);

    const auto [s0, p0] = epsilon_family(0.0, 1);
    CHECK(std::abs(p0) <= 1e-15);
    check_close(s0.amplitudes(), {0.0, 0.0, r2, r2}, 1e-14);
    CHECK(std::abs(entanglement_degree(s0, 1.0, 1.0).degree) <= 1e-14);

    const auto [sh, ph] = epsilon_family(0.5, 1);
    CHECK(ph == doctest::Approx(0.5).epsilon(1e-14));

    RandomStateGen gen(51);
    for (int i = 0; i < 100; ++i) {
        const double eps = gen.uniform(0.0, 1.0);
        for (int sign : {1, -1}) {
            const auto [s, predicted] = epsilon_family(eps, sign);
            CHECK(validate_state(s).pass());
            const auto report = entanglement_degree(s, 1.0, 1.0);
            CHECK(std::abs(report.degree - predicted) <= 1e-12);
            // On this family the degree equals the squared concurrence.
            CHECK(std::abs(report.degree - report.concurrence * report.concurrence) <=
                  1e-12);
        }
    }

    CHECK_THROWS_AS(epsilon_family(1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_family(0.5, 0), std::invalid_argument);
}

TEST_CASE("maximal entanglement test") {
    CHECK(is_maximally_entangled(bell_states()[1]).maximal);
    const auto sep = is_maximally_entangled(QuantumState::pure({1.0, 0.0, 0.0, 0.0}));
    CHECK_FALSE(sep.maximal);
    CHECK(sep.residual_a == doctest::Approx(0.5).epsilon(1e-13));
    CHECK_THROWS_AS(
        is_maximally_entangled(QuantumState::density(CMat::identity(4) * cplx(0.25, 0.0))),
        std::invalid_argument);
}

TEST_CASE("concurrence oracle") {
    for (const auto& bell : bell_states())
        CHECK(concurrence(bell) == doctest::Approx(1.0).epsilon(1e-12));

    RandomStateGen gen(53);
    for (int i = 0; i < 200; ++i)
        CHECK(std::abs(concurrence(gen.random_product_state())) <= 1e-7);

    CHECK(concurrence(epsilon_family(0.5, 1).first) ==
          doctest::Approx(r2).epsilon(1e-12));

    // For pure states the concurrence equals 2 kappa1 kappa2.
    for (int i = 0; i < 200; ++i) {
        const QuantumState s = gen.random_pure_state(2);
        const auto form = schmidt_decompose(s);
        CHECK(std::abs(concurrence(s) - 2.0 * form.kappa1 * form.kappa2) <= 1e-10);
    }

    // The density-matrix route agrees with the pure-state formula.
    for (int i = 0; i < 100; ++i) {
        const QuantumState s = gen.random_pure_state(2);
        const QuantumState rho = QuantumState::density(s.density_matrix());
        CHECK(std::abs(concurrence(rho) - concurrence(s)) <= 1e-7);
    }

    // Werner-like mixtures: C = max(0, (3p - 1)/2) for
    // rho = p |Phi+><Phi+| + (1 - p) I/4.
    for (double p : {0.0, 0.2, 1.0 / 3.0, 0.6, 0.9, 1.0}) {
        const CMat rho = bell_states()[0].density_matrix() * cplx(p, 0.0) +
                         CMat::identity(4) * cplx((1.0 - p) / 4.0, 0.0);
        const double want = std::max(0.0, (3.0 * p - 1.0) / 2.0);
        CHECK(std::abs(concurrence(QuantumState::density(rho)) - want) <= 1e-7);
    }
}
