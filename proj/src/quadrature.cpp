#include "qphase/quadrature.hpp"

#include <stdexcept>

namespace qphase {

GaussLegendreRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // Newton iteration on P_n roots, Chebyshev initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = half * w;
        rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

}  // namespace qphase
