#pragma once

#include <cstdint>
#include <random>

#include "qphase/core.hpp"

namespace qphase {

/// Seeded generator for random states used by property suites.
class RandomStateGen {
public:
    explicit RandomStateGen(std::uint64_t seed) : rng_(seed) {}

    cplx gaussian();
    CVec random_pure(int dim);
    CMat random_density(int dim, int mixture = 4);
    CMat random_hermitian(int dim);

    QuantumState random_pure_state(int qubits);
    QuantumState random_density_state(int qubits);
    /// rho_A (x) rho_B with each factor pure or mixed at random.
    QuantumState random_product_state();

    double uniform(double lo, double hi);

private:
    std::mt19937_64 rng_;
};

}  // namespace qphase
