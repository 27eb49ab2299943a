#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qphase/core.hpp"

namespace qphase {

struct SelfTestCheck {
    std::string suite;
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

struct SelfTestReport {
    std::uint64_t seed = 0;
    double elapsed_seconds = 0.0;
    std::vector<SelfTestCheck> checks;

    bool pass() const;
};

/// Runs every module invariant suite with the given RNG seed.
SelfTestReport run_selftest(std::uint64_t seed);

/// Brute-force oracle: (D+, D-) by 2D quadrature of the cast POVM
/// distribution Tr[rho Lambda(phi+, phi-)] on an nodes x nodes grid.
std::pair<double, double> dispersions_by_quadrature(const QuantumState& s, double gamma_a,
                                                    double gamma_b, int nodes = 64);

}  // namespace qphase
