#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qphase/entangle.hpp"
#include "qphase/io.hpp"
#include "qphase/povm.hpp"
#include "qphase/quadrature.hpp"
#include "qphase/qubit_phase.hpp"
#include "qphase/selftest.hpp"
#include "qphase/twoqubit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUsage = 64;

using nlohmann::json;

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw qphase::StateFileError(out_path + ": cannot open output file");
        out << doc.dump(2) << '\n';
    }
}

qphase::QuantumState load_checked(const std::string& path, int qubits) {
    const auto state = qphase::load_state(path);
    if (state.qubits() != qubits)
        throw qphase::StateFileError(path + ": expected a " + std::to_string(qubits) +
                                     "-qubit state, got " +
                                     std::to_string(state.qubits()) + " qubits");
    return state;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qubit phase operators, phase POVMs and the phase-dispersion "
                 "entanglement degree for one and two qubits"};
    app.require_subcommand(1);

    std::string state_path, out_path;
    double gamma = 1.0, gamma_a = 1.0, gamma_b = 1.0;
    int points = 256, steps = 11;
    std::string sign = "plus";
    std::uint64_t seed = 20020531;
    double tol_scale = 1.0;
    bool force_json = false;
    int verbosity = 1;

    auto* phase_dist = app.add_subcommand(
        "phase-dist", "Export the POVM phase distribution P(phi) as CSV");
    phase_dist->add_option("--state", state_path, "state file (JSON)")->required();
    phase_dist->add_option("--gamma", gamma, "POVM parameter in (0,1]");
    phase_dist->add_option("--points", points, "grid points")->check(CLI::Range(8, 1 << 20));
    phase_dist->add_option("--out", out_path, "output CSV path")->required();

    auto* phase_herm = app.add_subcommand(
        "phase-herm", "Two-point Hermitian phase distribution as JSON");
    phase_herm->add_option("--state", state_path, "state file (JSON)")->required();
    phase_herm->add_option("--out", out_path, "output path (default stdout)");

    auto* joint_dist = app.add_subcommand(
        "joint-dist", "Export the cast joint distribution P(phi+, phi-) as CSV");
    joint_dist->add_option("--state", state_path, "two-qubit state file")->required();
    joint_dist->add_option("--gamma-a", gamma_a, "Alice POVM parameter");
    joint_dist->add_option("--gamma-b", gamma_b, "Bob POVM parameter");
    joint_dist->add_option("--points", points, "grid points per axis")
        ->check(CLI::Range(8, 4096));
    joint_dist->add_option("--out", out_path, "output CSV path")->required();

    auto* entanglement = app.add_subcommand(
        "entanglement", "Phase-dispersion entanglement report as JSON");
    entanglement->add_option("--state", state_path, "two-qubit state file")->required();
    entanglement->add_option("--gamma-a", gamma_a, "Alice POVM parameter");
    entanglement->add_option("--gamma-b", gamma_b, "Bob POVM parameter");
    entanglement->add_option("--out", out_path, "output path (default stdout)");

    auto* sweep = app.add_subcommand(
        "sweep-epsilon", "Degree along the epsilon state family as CSV");
    sweep->add_option("--steps", steps, "number of epsilon samples")
        ->check(CLI::Range(2, 1 << 20));
    sweep->add_option("--sign", sign, "plus or minus branch")
        ->check(CLI::IsMember({"plus", "minus"}));
    sweep->add_option("--gamma-a", gamma_a, "Alice POVM parameter");
    sweep->add_option("--gamma-b", gamma_b, "Bob POVM parameter");
    sweep->add_option("--out", out_path, "output CSV path")->required();

    auto* validate = app.add_subcommand(
        "validate", "Run every invariant suite and report residuals");
    validate->add_option("--seed", seed, "RNG seed for the property suites");
    validate->add_option("--tol-scale", tol_scale, "tolerance scale factor");
    validate->add_option("-v,--verbosity", verbosity, "0 = summary, 1 = failures, 2 = all");
    validate->add_option("--out", out_path, "JSON report path (default stdout)");
    validate->add_flag("--json", force_json, "emit the full JSON report to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (phase_dist->parsed()) {
            if (!(gamma > 0.0) || gamma > 1.0) {
                std::cerr << "error: --gamma must lie in (0, 1]\n";
                return kExitUsage;
            }
            const auto state = load_checked(state_path, 1);
            qphase::write_phase_dist_csv(
                out_path, qphase::phase_distribution(state, {gamma}), points);
            return kExitOk;
        }

        if (phase_herm->parsed()) {
            const auto state = load_checked(state_path, 1);
            const auto [p_plus, p_minus] = qphase::hermitian_phase_distribution(state);
            emit(json{{"p_plus", p_plus}, {"p_minus", p_minus}}, out_path);
            return kExitOk;
        }

        if (joint_dist->parsed()) {
            if (!(gamma_a > 0.0) || gamma_a > 1.0 || !(gamma_b > 0.0) || gamma_b > 1.0) {
                std::cerr << "error: --gamma-a/--gamma-b must lie in (0, 1]\n";
                return kExitUsage;
            }
            const auto state = load_checked(state_path, 2);
            qphase::write_joint_dist_csv(
                out_path, qphase::joint_distribution(state, gamma_a, gamma_b), points);
            return kExitOk;
        }

        if (entanglement->parsed()) {
            if (!(gamma_a > 0.0) || gamma_a > 1.0 || !(gamma_b > 0.0) || gamma_b > 1.0) {
                std::cerr << "error: --gamma-a/--gamma-b must lie in (0, 1]\n";
                return kExitUsage;
            }
            const auto state = load_checked(state_path, 2);
            emit(qphase::report_to_json(
                     qphase::entanglement_degree(state, gamma_a, gamma_b)),
                 out_path);
            return kExitOk;
        }

        if (sweep->parsed()) {
            if (!(gamma_a > 0.0) || gamma_a > 1.0 || !(gamma_b > 0.0) || gamma_b > 1.0) {
                std::cerr << "error: --gamma-a/--gamma-b must lie in (0, 1]\n";
                return kExitUsage;
            }
            std::ofstream out(out_path);
            if (!out) throw qphase::StateFileError(out_path + ": cannot open output file");
            out << "epsilon,predicted,computed,concurrence\n";
            const int branch = sign == "plus" ? 1 : -1;
            for (int i = 0; i < steps; ++i) {
                const double eps = static_cast<double>(i) / (steps - 1);
                const auto [state, predicted] = qphase::epsilon_family(eps, branch);
                const auto report =
                    qphase::entanglement_degree(state, gamma_a, gamma_b);
                out << qphase::format_number(eps) << ','
                    << qphase::format_number(predicted) << ','
                    << qphase::format_number(report.degree) << ','
                    << qphase::format_number(report.concurrence) << '\n';
            }
            return kExitOk;
        }

        if (validate->parsed()) {
            if (!(tol_scale > 0.0)) {
                std::cerr << "error: --tol-scale must be positive\n";
                return kExitUsage;
            }
            auto report = qphase::run_selftest(seed);
            int failures = 0;
            for (auto& check : report.checks) {
                check.tolerance *= tol_scale;
                check.pass = check.residual <= check.tolerance;
                if (!check.pass) ++failures;
                if (verbosity >= 2 || (verbosity >= 1 && !check.pass))
                    std::cerr << (check.pass ? "pass " : "FAIL ") << check.suite << '.'
                              << check.name << "  residual "
                              << qphase::format_number(check.residual) << "  tolerance "
                              << qphase::format_number(check.tolerance) << '\n';
            }
            std::cerr << (failures == 0 ? "validate: all " : "validate: FAILURES ")
                      << report.checks.size() << " checks, " << failures
                      << " failed, " << qphase::format_number(report.elapsed_seconds)
                      << " s\n";
            if (force_json || !out_path.empty())
                emit(qphase::selftest_to_json(report), out_path);
            return failures == 0 ? kExitOk : kExitValidationFailure;
        }
    } catch (const qphase::StateFileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
