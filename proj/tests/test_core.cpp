#include <doctest.h>

#include <cmath>

#include "qphase/core.hpp"
#include "qphase/entangle.hpp"
#include "qphase/qubit_phase.hpp"
#include "qphase/random_states.hpp"
#include "test_util.hpp"

using namespace qphase;
using qtest::check_close;

TEST_CASE("kron basic identities") {
    const CMat i2 = CMat::identity(2);
    check_close(kron(i2, i2), CMat::identity(4), 0.0);

    const auto l = ladder();
    CMat want(4);  // |11><00|
    want(3, 0) = 1.0;
    check_close(kron(l.s_plus, l.s_plus), want, 0.0);

    // kron(sigma_z/2, I) = Sz (x) I has diagonal (-1/2,-1/2,+1/2,+1/2).
    const CMat sz_i = kron(l.s_z, i2);
    CHECK(std::real(sz_i(0, 0)) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(std::real(sz_i(1, 1)) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(std::real(sz_i(2, 2)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::real(sz_i(3, 3)) == doctest::Approx(0.5).epsilon(1e-14));

    CHECK_THROWS_AS(kron(CMat::identity(4), i2), std::invalid_argument);
}

TEST_CASE("kron trace factorization and partial trace on random matrices") {
    RandomStateGen gen(7);
    for (int i = 0; i < 100; ++i) {
        const CMat a = gen.random_hermitian(2);
        const CMat b = gen.random_hermitian(2);
        const CMat ab = kron(a, b);
        CHECK(std::abs(ab.trace() - a.trace() * b.trace()) <= 1e-12);
        check_close(partial_trace(ab, Subsystem::A), a * b.trace(), 1e-12);
        check_close(partial_trace(ab, Subsystem::B), b * a.trace(), 1e-12);
    }
}

TEST_CASE("partial trace examples") {
    const auto bells = bell_states();
    const CMat half = CMat::identity(2) * cplx(0.5, 0.0);
    check_close(partial_trace(bells[0].density_matrix(), Subsystem::A), half, 1e-14);

    const QuantumState s00 = QuantumState::pure({1.0, 0.0, 0.0, 0.0});
    CMat proj0(2);
    proj0(0, 0) = 1.0;
    check_close(partial_trace(s00.density_matrix(), Subsystem::B), proj0, 1e-14);

    // Trace preservation.
    RandomStateGen gen(11);
    for (int i = 0; i < 20; ++i) {
        const CMat rho = gen.random_density(4);
        CHECK(std::abs(partial_trace(rho, Subsystem::A).trace() - rho.trace()) <= 1e-12);
    }
}

TEST_CASE("hermitian eigendecomposition") {
    const auto id_eig = hermitian_eigen(CMat::identity(2));
    CHECK(id_eig[0].value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(id_eig[1].value == doctest::Approx(1.0).epsilon(1e-14));

    // S_y = (S+ - S-)/(2i) has eigenvalues +-1/2.
    const auto l = ladder();
    const CMat sy = (l.s_plus - l.s_minus) * cplx(0.0, -0.5);
    const auto sy_eig = hermitian_eigen(sy);
    CHECK(sy_eig[0].value == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(sy_eig[1].value == doctest::Approx(-0.5).epsilon(1e-13));

    const auto bell_eig = hermitian_eigen(bell_states()[0].density_matrix());
    CHECK(bell_eig[0].value == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k < 4; ++k) CHECK(std::abs(bell_eig[k].value) <= 1e-12);

    CHECK_THROWS_AS(hermitian_eigen(CMat(2) + ladder().s_plus), std::invalid_argument);
}

TEST_CASE("hermitian eigen properties on random inputs") {
    RandomStateGen gen(13);
    for (int i = 0; i < 200; ++i) {
        const int dim = i % 2 ? 4 : 2;
        const CMat h = gen.random_hermitian(dim);
        const auto eig = hermitian_eigen(h);

        double sum = 0.0;
        CMat rebuilt(dim);
        for (const auto& [value, vector] : eig) {
            sum += value;
            rebuilt += outer(vector) * cplx(value, 0.0);
        }
        CHECK(std::abs(sum - std::real(h.trace())) <= 1e-10);
        check_close(rebuilt, h, 1e-9);

        for (size_t a = 0; a < eig.size(); ++a)
            for (size_t b = 0; b < eig.size(); ++b) {
                const double want = a == b ? 1.0 : 0.0;
                CHECK(std::abs(dot(eig[a].vector, eig[b].vector) - want) <= 1e-10);
            }
    }
}

TEST_CASE("hermitian square root") {
    RandomStateGen gen(17);
    for (int i = 0; i < 50; ++i) {
        const CMat rho = gen.random_density(4);
        const CMat root = hermitian_sqrt(rho);
        check_close(root * root, rho, 1e-10);
    }
}

TEST_CASE("state validation") {
    CHECK(validate_state(QuantumState::pure({1.0, 0.0})).pass());

    const auto bad_norm = validate_state(QuantumState::pure({1.0, 1.0}));
    CHECK_FALSE(bad_norm.pass());
    double norm_residual = 0.0;
    for (const auto& c : bad_norm.checks)
        if (c.name == "unit_norm") norm_residual = c.residual;
    CHECK(norm_residual == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));

    CMat rho(2);
    rho(0, 0) = 0.6;
    rho(1, 1) = 0.5;
    const auto bad_trace = validate_state(QuantumState::density(rho));
    CHECK_FALSE(bad_trace.pass());
    double trace_residual = 0.0;
    for (const auto& c : bad_trace.checks)
        if (c.name == "unit_trace") trace_residual = c.residual;
    CHECK(trace_residual == doctest::Approx(0.1).epsilon(1e-12));
}
