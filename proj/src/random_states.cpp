#include "qphase/random_states.hpp"

namespace qphase {

cplx RandomStateGen::gaussian() {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng_), n(rng_)};
}

CVec RandomStateGen::random_pure(int dim) {
    CVec v(dim);
    for (auto& e : v) e = gaussian();
    const double nrm = norm(v);
    for (auto& e : v) e /= nrm;
    return v;
}

CMat RandomStateGen::random_density(int dim, int mixture) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    CMat rho(dim);
    double total = 0.0;
    std::vector<double> w(mixture);
    for (auto& wi : w) {
        wi = u(rng_);
        total += wi;
    }
    for (double wi : w) rho += outer(random_pure(dim)) * cplx(wi / total, 0.0);
    return rho;
}

CMat RandomStateGen::random_hermitian(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = gaussian();
    return (m + m.adjoint()) * cplx(0.5, 0.0);
}

QuantumState RandomStateGen::random_pure_state(int qubits) {
    return QuantumState::pure(random_pure(qubits == 1 ? 2 : 4));
}

QuantumState RandomStateGen::random_density_state(int qubits) {
    return QuantumState::density(random_density(qubits == 1 ? 2 : 4));
}

QuantumState RandomStateGen::random_product_state() {
    std::uniform_int_distribution<int> coin(0, 1);
    auto factor = [&]() {
        return coin(rng_) ? random_density(2, 3) : outer(random_pure(2));
    };
    return QuantumState::density(kron(factor(), factor()));
}

double RandomStateGen::uniform(double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    return u(rng_);
}

}  // namespace qphase
