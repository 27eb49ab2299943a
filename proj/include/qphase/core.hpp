#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace qphase {

using cplx = std::complex<double>;

/// Tolerances used by state validation and the self-test suites.
struct Tolerances {
    double norm = 1e-12;       // unit norm of pure vectors
    double hermiticity = 1e-12;
    double psd = 1e-10;        // min eigenvalue >= -psd
    double trace = 1e-12;
};

/// Dense complex matrix of dimension 2 or 4, row-major.
/// Basis order is (|0>,|1>) for one qubit and (|00>,|01>,|10>,|11>)
/// for two, with subsystem A as the left Kronecker factor.
class CMat {
public:
    explicit CMat(int dim);
    static CMat identity(int dim);
    static CMat zero(int dim) { return CMat(dim); }

    int dim() const { return dim_; }

    cplx& operator()(int r, int c) { return a_[r * dim_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[r * dim_ + c]; }

    CMat operator+(const CMat& o) const;
    CMat operator-(const CMat& o) const;
    CMat operator*(const CMat& o) const;
    CMat operator*(cplx s) const;
    CMat& operator+=(const CMat& o);

    CMat adjoint() const;
    CMat conj() const;
    cplx trace() const;

    double max_abs() const;
    bool is_hermitian(double tol) const;

private:
    int dim_;
    std::array<cplx, 16> a_{};
};

inline CMat operator*(cplx s, const CMat& m) { return m * s; }

double max_abs_diff(const CMat& a, const CMat& b);

using CVec = std::vector<cplx>;

cplx dot(const CVec& a, const CVec& b);  // <a|b>, conjugate-linear in a
double norm(const CVec& v);
CMat outer(const CVec& v);               // |v><v|
CVec apply(const CMat& m, const CVec& v);
CVec kron_vec(const CVec& a, const CVec& b);

/// Kronecker product with the A qubit as the left factor.
CMat kron(const CMat& a, const CMat& b);

enum class Subsystem { A, B };

/// Trace over the complement of `keep`.
CMat partial_trace(const CMat& m, Subsystem keep);

struct EigenPair {
    double value;
    CVec vector;
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// Closed form for dim 2, cyclic Jacobi rotations for dim 4.
std::vector<EigenPair> hermitian_eigen(const CMat& m);

double min_eigenvalue(const CMat& hermitian);

/// Principal PSD square root of a Hermitian PSD matrix.
CMat hermitian_sqrt(const CMat& m);

/// Pure state vector or density matrix for 1 or 2 qubits.
class QuantumState {
public:
    static QuantumState pure(CVec amplitudes);
    static QuantumState density(CMat rho);

    int qubits() const { return qubits_; }
    bool is_pure() const { return pure_; }
    const CVec& amplitudes() const;  // throws if not pure
    CMat density_matrix() const;     // outer product for pure states

private:
    QuantumState() : qubits_(0), pure_(false), rho_(2) {}
    int qubits_;
    bool pure_;
    CVec amp_;
    CMat rho_;
};

struct ValidationCheck {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool pass() const;
};

/// Never throws; reports measured residuals against `tol`.
ValidationReport validate_state(const QuantumState& s, const Tolerances& tol = {});

}  // namespace qphase
