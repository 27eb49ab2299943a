#include "qphase/io.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "qphase/quadrature.hpp"

namespace qphase {

using nlohmann::json;

namespace {

cplx parse_complex(const json& entry, const std::string& context, size_t index) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
        throw StateFileError(context + ": data[" + std::to_string(index) +
                             "] must be a [re, im] pair");
    }
    return {entry[0].get<double>(), entry[1].get<double>()};
}

}  // namespace

QuantumState parse_state(const json& doc, const std::string& context) {
    if (!doc.is_object()) throw StateFileError(context + ": top level must be an object");
    for (const char* key : {"qubits", "type", "data"}) {
        if (!doc.contains(key))
            throw StateFileError(context + ": missing field '" + key + "'");
    }
    const int qubits = doc["qubits"].is_number_integer() ? doc["qubits"].get<int>() : -1;
    if (qubits != 1 && qubits != 2)
        throw StateFileError(context + ": field 'qubits' must be 1 or 2");
    const std::string type = doc["type"].is_string() ? doc["type"].get<std::string>() : "";
    if (type != "pure" && type != "density")
        throw StateFileError(context + ": field 'type' must be \"pure\" or \"density\"");
    const json& data = doc["data"];
    if (!data.is_array()) throw StateFileError(context + ": field 'data' must be an array");

    const int dim = qubits == 1 ? 2 : 4;
    const size_t expected = type == "pure" ? dim : dim * dim;
    if (data.size() != expected)
        throw StateFileError(context + ": field 'data' must have " +
                             std::to_string(expected) + " entries, got " +
                             std::to_string(data.size()));

    QuantumState state = [&] {
        if (type == "pure") {
            CVec amp(expected);
            for (size_t i = 0; i < expected; ++i) amp[i] = parse_complex(data[i], context, i);
            return QuantumState::pure(std::move(amp));
        }
        CMat rho(dim);
        for (size_t i = 0; i < expected; ++i)
            rho(static_cast<int>(i) / dim, static_cast<int>(i) % dim) =
                parse_complex(data[i], context, i);
        return QuantumState::density(std::move(rho));
    }();

    const auto report = validate_state(state);
    if (!report.pass()) {
        std::string msg = context + ": state fails validation:";
        for (const auto& check : report.checks)
            if (!check.pass)
                msg += " " + check.name + " residual " + format_number(check.residual) + ";";
        throw StateFileError(msg);
    }
    return state;
}

QuantumState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StateFileError(path + ": cannot open file");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw StateFileError(path + ": " + e.what());
    }
    return parse_state(doc, path);
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_phase_dist_csv(const std::string& path, const PhaseFourier& dist, int points) {
    std::ofstream out(path);
    if (!out) throw StateFileError(path + ": cannot open output file");
    out << "phi,p\n";
    for (int i = 0; i < points; ++i) {
        const double phi = i * two_pi / points;
        out << format_number(phi) << ',' << format_number(dist(phi)) << '\n';
    }
}

void write_joint_dist_csv(const std::string& path, const JointPhaseFourier& dist,
                          int points) {
    std::ofstream out(path);
    if (!out) throw StateFileError(path + ": cannot open output file");
    out << "phi_plus,phi_minus,p\n";
    for (int i = 0; i < points; ++i)
        for (int j = 0; j < points; ++j) {
            const double pp = i * two_pi / points;
            const double pm = j * two_pi / points;
            out << format_number(pp) << ',' << format_number(pm) << ','
                << format_number(dist(pp, pm)) << '\n';
        }
}

json report_to_json(const EntanglementReport& r) {
    return json{{"degree", r.degree},
                {"d_plus", r.d_plus},
                {"d_minus", r.d_minus},
                {"gamma_a", r.gamma_a},
                {"gamma_b", r.gamma_b},
                {"concurrence", r.concurrence},
                {"c_plus", {std::real(r.c_plus), std::imag(r.c_plus)}},
                {"c_minus", {std::real(r.c_minus), std::imag(r.c_minus)}}};
}

json selftest_to_json(const SelfTestReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"suite", c.suite},
                          {"name", c.name},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    return json{{"seed", r.seed},
                {"elapsed_seconds", r.elapsed_seconds},
                {"pass", r.pass()},
                {"checks", checks}};
}

}  // namespace qphase
