#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace qphase {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce an angle to the fiducial window [0, 2*pi).
inline double wrap_phase(double phi) {
    double r = std::fmod(phi, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
}

/// Composite trapezoid on a uniform periodic grid over [0, 2*pi);
/// spectrally accurate for periodic integrands.
template <typename F>
auto periodic_quadrature(F&& f, int nodes) {
    const double h = two_pi / nodes;
    auto acc = f(0.0);
    for (int i = 1; i < nodes; ++i) acc += f(i * h);
    return acc * h;
}

struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [a, b].
GaussLegendreRule gauss_legendre(int n, double a, double b);

template <typename F>
auto gauss_quadrature(F&& f, const GaussLegendreRule& rule) {
    auto acc = f(rule.nodes[0]) * rule.weights[0];
    for (size_t i = 1; i < rule.nodes.size(); ++i)
        acc += f(rule.nodes[i]) * rule.weights[i];
    return acc;
}

}  // namespace qphase
