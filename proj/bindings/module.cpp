#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "qphase/entangle.hpp"
#include "qphase/povm.hpp"
#include "qphase/quadrature.hpp"
#include "qphase/qubit_phase.hpp"
#include "qphase/selftest.hpp"
#include "qphase/twoqubit.hpp"

namespace py = pybind11;
using namespace qphase;

namespace {

using Rows = std::vector<std::vector<cplx>>;

Rows to_rows(const CMat& m) {
    Rows rows(m.dim(), std::vector<cplx>(m.dim()));
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) rows[r][c] = m(r, c);
    return rows;
}

CMat from_rows(const Rows& rows) {
    const int dim = static_cast<int>(rows.size());
    if (dim != 2 && dim != 4) throw py::value_error("matrix must be 2x2 or 4x4");
    CMat m(dim);
    for (int r = 0; r < dim; ++r) {
        if (static_cast<int>(rows[r].size()) != dim)
            throw py::value_error("matrix rows must all have length " + std::to_string(dim));
        for (int c = 0; c < dim; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_qphase, mod) {
    mod.doc() = "Qubit phase operators, covariant phase POVMs and the "
                "phase-dispersion entanglement degree";

    py::class_<QuantumState>(mod, "QuantumState")
        .def_static("pure", [](const CVec& amp) { return QuantumState::pure(amp); },
                    py::arg("amplitudes"))
        .def_static("density", [](const Rows& rho) {
                        return QuantumState::density(from_rows(rho));
                    }, py::arg("rho"))
        .def_property_readonly("qubits", &QuantumState::qubits)
        .def_property_readonly("is_pure", &QuantumState::is_pure)
        .def_property_readonly("amplitudes",
                               [](const QuantumState& s) { return s.amplitudes(); })
        .def("density_matrix",
             [](const QuantumState& s) { return to_rows(s.density_matrix()); });

    mod.def("validate_state", [](const QuantumState& s) {
        const auto report = validate_state(s);
        py::list checks;
        for (const auto& c : report.checks)
            checks.append(py::dict(py::arg("name") = c.name,
                                   py::arg("residual") = c.residual,
                                   py::arg("tolerance") = c.tolerance,
                                   py::arg("pass") = c.pass));
        return py::dict(py::arg("pass") = report.pass(), py::arg("checks") = checks);
    });

    mod.def("bloch_state", &bloch_state, py::arg("theta"), py::arg("phi"));
    mod.def("bloch_vector", &bloch_vector, py::arg("state"));
    mod.def("hermitian_phase_distribution", &hermitian_phase_distribution,
            py::arg("state"));
    mod.def("phase_eigenstates", [] {
        py::list out;
        for (const auto& e : phase_eigenstates())
            out.append(py::make_tuple(e.eigenphase, e.state));
        return out;
    });
    mod.def("phase_operator_function",
            [](const std::function<double(double)>& f) {
                return to_rows(phase_operator_function(f));
            }, py::arg("f"));

    mod.def("povm_element", [](double gamma, double phi) {
        return to_rows(povm_element(phase_povm(gamma), phi));
    }, py::arg("gamma"), py::arg("phi"));

    py::class_<PhaseFourier>(mod, "PhaseFourier")
        .def_readonly("c", &PhaseFourier::c)
        .def_readonly("gamma", &PhaseFourier::gamma)
        .def("__call__", &PhaseFourier::operator(), py::arg("phi"));

    mod.def("phase_distribution", [](const QuantumState& s, double gamma) {
        return phase_distribution(s, phase_povm(gamma));
    }, py::arg("state"), py::arg("gamma") = 1.0);
    mod.def("dispersion", [](const PhaseFourier& d) {
        const auto r = dispersion(d);
        return py::make_tuple(r.d, r.d2);
    }, py::arg("distribution"));
    mod.def("moments_from_distribution", &moments_from_distribution,
            py::arg("distribution"));
    mod.def("reconstruct_from_three_points", &reconstruct_from_three_points,
            py::arg("p0"), py::arg("p1"), py::arg("p_neg1"));
    mod.def("q_function", &q_function, py::arg("state"), py::arg("theta"),
            py::arg("phi"));
    mod.def("q_povm_element", [](double phi, int nodes) {
        return to_rows(q_povm_element(phi, nodes));
    }, py::arg("phi"), py::arg("nodes") = 64);

    mod.def("sum_diff_operators", [] {
        const auto ops = build_sum_diff();
        return py::dict(py::arg("e_plus") = to_rows(ops.e_plus),
                        py::arg("e_minus") = to_rows(ops.e_minus),
                        py::arg("s_plus_z") = to_rows(ops.s_plus_z),
                        py::arg("s_minus_z") = to_rows(ops.s_minus_z),
                        py::arg("v") = to_rows(ops.v));
    });
    mod.def("cast_basis_state", [](double phi_plus, double phi_minus, int v) {
        return cast_basis_state(phi_plus, phi_minus, v).vector;
    }, py::arg("phi_plus"), py::arg("phi_minus"), py::arg("v"));
    mod.def("marginal_diff_povm", [](double gamma_a, double gamma_b, double phi_minus) {
        return to_rows(marginal_diff_povm(gamma_a, gamma_b, phi_minus));
    }, py::arg("gamma_a"), py::arg("gamma_b"), py::arg("phi_minus"));

    py::class_<JointPhaseFourier>(mod, "JointPhaseFourier")
        .def_readonly("c_plus", &JointPhaseFourier::c_plus)
        .def_readonly("c_minus", &JointPhaseFourier::c_minus)
        .def_readonly("gamma_a", &JointPhaseFourier::gamma_a)
        .def_readonly("gamma_b", &JointPhaseFourier::gamma_b)
        .def("__call__", &JointPhaseFourier::operator(), py::arg("phi_plus"),
             py::arg("phi_minus"));
    mod.def("joint_distribution", &joint_distribution, py::arg("state"),
            py::arg("gamma_a") = 1.0, py::arg("gamma_b") = 1.0);

    mod.def("sum_diff_dispersions", &sum_diff_dispersions, py::arg("state"),
            py::arg("gamma_a") = 1.0, py::arg("gamma_b") = 1.0);
    mod.def("entanglement_degree", [](const QuantumState& s, double ga, double gb) {
        const auto r = entanglement_degree(s, ga, gb);
        return py::dict(py::arg("degree") = r.degree, py::arg("d_plus") = r.d_plus,
                        py::arg("d_minus") = r.d_minus, py::arg("gamma_a") = r.gamma_a,
                        py::arg("gamma_b") = r.gamma_b,
                        py::arg("concurrence") = r.concurrence,
                        py::arg("c_plus") = r.c_plus, py::arg("c_minus") = r.c_minus);
    }, py::arg("state"), py::arg("gamma_a") = 1.0, py::arg("gamma_b") = 1.0);
    mod.def("concurrence", &concurrence, py::arg("state"));
    mod.def("schmidt_decompose", [](const QuantumState& s) {
        const auto f = schmidt_decompose(s);
        return py::dict(py::arg("kappa1") = f.kappa1, py::arg("kappa2") = f.kappa2,
                        py::arg("basis_a") = f.basis_a, py::arg("basis_b") = f.basis_b);
    }, py::arg("state"));
    mod.def("bell_states", [] {
        const auto states = bell_states();
        return std::vector<QuantumState>(states.begin(), states.end());
    });
    mod.def("epsilon_family", &epsilon_family, py::arg("epsilon"), py::arg("sign") = 1);
    mod.def("is_maximally_entangled", [](const QuantumState& s) {
        const auto r = is_maximally_entangled(s);
        return py::dict(py::arg("maximal") = r.maximal,
                        py::arg("residual_a") = r.residual_a,
                        py::arg("residual_b") = r.residual_b);
    }, py::arg("state"));

    mod.def("run_selftest", [](std::uint64_t seed) {
        const auto r = run_selftest(seed);
        py::list checks;
        for (const auto& c : r.checks)
            checks.append(py::dict(py::arg("suite") = c.suite, py::arg("name") = c.name,
                                   py::arg("residual") = c.residual,
                                   py::arg("tolerance") = c.tolerance,
                                   py::arg("pass") = c.pass));
        return py::dict(py::arg("pass") = r.pass(), py::arg("seed") = r.seed,
                        py::arg("elapsed_seconds") = r.elapsed_seconds,
                        py::arg("checks") = checks);
    }, py::arg("seed") = 20020531ull);
}
