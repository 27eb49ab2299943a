#include "qphase/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qphase {

CMat::CMat(int dim) : dim_(dim) {
    if (dim != 2 && dim != 4) {
        throw std::invalid_argument("CMat: dimension must be 2 or 4");
    }
}

CMat CMat::identity(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::operator+(const CMat& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMat: dimension mismatch");
    CMat r(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

CMat CMat::operator-(const CMat& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMat: dimension mismatch");
    CMat r(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

CMat CMat::operator*(const CMat& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMat: dimension mismatch");
    CMat r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < dim_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

CMat CMat::operator*(cplx s) const {
    CMat r(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) r.a_[i] = a_[i] * s;
    return r;
}

CMat& CMat::operator+=(const CMat& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("CMat: dimension mismatch");
    for (int i = 0; i < dim_ * dim_; ++i) a_[i] += o.a_[i];
    return *this;
}

CMat CMat::adjoint() const {
    CMat r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

CMat CMat::conj() const {
    CMat r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(i, j));
    return r;
}

cplx CMat::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double CMat::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(a_[i]));
    return m;
}

bool CMat::is_hermitian(double tol) const {
    return max_abs_diff(*this, adjoint()) <= tol;
}

double max_abs_diff(const CMat& a, const CMat& b) {
    return (a - b).max_abs();
}

cplx dot(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    cplx s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm(const CVec& v) { return std::sqrt(std::real(dot(v, v))); }

CMat outer(const CVec& v) {
    const int d = static_cast<int>(v.size());
    CMat m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

CVec apply(const CMat& m, const CVec& v) {
    if (static_cast<int>(v.size()) != m.dim())
        throw std::invalid_argument("apply: size mismatch");
    CVec r(v.size(), 0.0);
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

CVec kron_vec(const CVec& a, const CVec& b) {
    CVec r(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
    return r;
}

CMat kron(const CMat& a, const CMat& b) {
    if (a.dim() != 2 || b.dim() != 2)
        throw std::invalid_argument("kron: both factors must have dimension 2");
    CMat r(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(i * 2 + k, j * 2 + l) = a(i, j) * b(k, l);
    return r;
}

CMat partial_trace(const CMat& m, Subsystem keep) {
    if (m.dim() != 4) throw std::invalid_argument("partial_trace: input must have dimension 4");
    CMat r(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                if (keep == Subsystem::A)
                    r(i, j) += m(i * 2 + k, j * 2 + k);
                else
                    r(i, j) += m(k * 2 + i, k * 2 + j);
            }
    return r;
}

namespace {

// One Jacobi sweep pivot: zero the (p,q) element of Hermitian h, accumulate into v.
void jacobi_rotate(CMat& h, CMat& v, int p, int q) {
    const cplx hpq = h(p, q);
    const double r = std::abs(hpq);
    if (r < 1e-300) return;
    const double app = std::real(h(p, p));
    const double aqq = std::real(h(q, q));
    const double alpha = std::arg(hpq);
    const double theta = 0.5 * std::atan2(-2.0 * r, app - aqq);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const cplx ephase = std::polar(1.0, alpha);

    const int n = h.dim();
    CMat j = CMat::identity(n);
    j(p, p) = c;
    j(p, q) = s * ephase;
    j(q, p) = -s * std::conj(ephase);
    j(q, q) = c;

    h = j.adjoint() * h * j;
    v = v * j;
    h(p, q) = 0.0;
    h(q, p) = 0.0;
}

double offdiag_norm(const CMat& h) {
    double s = 0.0;
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

}  // namespace

std::vector<EigenPair> hermitian_eigen(const CMat& m) {
    if (!m.is_hermitian(1e-10))
        throw std::invalid_argument("hermitian_eigen: input is not Hermitian");

    const int n = m.dim();
    // Symmetrize to kill sub-tolerance asymmetry before iterating.
    CMat h = (m + m.adjoint()) * cplx(0.5, 0.0);
    CMat v = CMat::identity(n);

    const double scale = std::max(h.max_abs(), 1e-300);
    for (int sweep = 0; sweep < 60 && offdiag_norm(h) > 1e-15 * scale; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) jacobi_rotate(h, v, p, q);
    }

    std::vector<EigenPair> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        CVec vec(n);
        for (int r = 0; r < n; ++r) vec[r] = v(r, i);
        out.push_back({std::real(h(i, i)), std::move(vec)});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const EigenPair& a, const EigenPair& b) { return a.value > b.value; });
    return out;
}

double min_eigenvalue(const CMat& hermitian) {
    const auto eig = hermitian_eigen(hermitian);
    return eig.back().value;
}

CMat hermitian_sqrt(const CMat& m) {
    const auto eig = hermitian_eigen(m);
    CMat r(m.dim());
    for (const auto& [lambda, vec] : eig) {
        if (lambda <= 0.0) continue;
        r += outer(vec) * cplx(std::sqrt(lambda), 0.0);
    }
    return r;
}

QuantumState QuantumState::pure(CVec amplitudes) {
    const auto n = amplitudes.size();
    if (n != 2 && n != 4)
        throw std::invalid_argument("QuantumState: pure vector must have length 2 or 4");
    QuantumState s;
    s.qubits_ = n == 2 ? 1 : 2;
    s.pure_ = true;
    s.amp_ = std::move(amplitudes);
    return s;
}

QuantumState QuantumState::density(CMat rho) {
    QuantumState s;
    s.qubits_ = rho.dim() == 2 ? 1 : 2;
    s.pure_ = false;
    s.rho_ = std::move(rho);
    return s;
}

const CVec& QuantumState::amplitudes() const {
    if (!pure_) throw std::invalid_argument("QuantumState: not a pure state");
    return amp_;
}

CMat QuantumState::density_matrix() const {
    return pure_ ? outer(amp_) : rho_;
}

bool ValidationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidationCheck& c) { return c.pass; });
}

ValidationReport validate_state(const QuantumState& s, const Tolerances& tol) {
    ValidationReport rep;
    auto add = [&rep](const std::string& name, double residual, double tolerance) {
        rep.checks.push_back({name, residual, tolerance, residual <= tolerance});
    };

    if (s.is_pure()) {
        add("unit_norm", std::abs(norm(s.amplitudes()) - 1.0), tol.norm);
    } else {
        const CMat rho = s.density_matrix();
        add("hermitian", max_abs_diff(rho, rho.adjoint()), tol.hermiticity);
        add("unit_trace", std::abs(rho.trace() - 1.0), tol.trace);
        if (rho.is_hermitian(1e-8)) {
            const CMat h = (rho + rho.adjoint()) * cplx(0.5, 0.0);
            add("positive_semidefinite", std::max(0.0, -min_eigenvalue(h)), tol.psd);
        } else {
            add("positive_semidefinite", std::numeric_limits<double>::infinity(), tol.psd);
        }
    }
    return rep;
}

}  // namespace qphase
