#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qphase/core.hpp"
#include "qphase/entangle.hpp"
#include "qphase/povm.hpp"
#include "qphase/selftest.hpp"
#include "qphase/twoqubit.hpp"

namespace qphase {

/// Raised for unreadable or invalid state files; message carries field context.
struct StateFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the JSON state file format:
/// { "qubits": 1|2, "type": "pure"|"density", "data": [[re, im], ...] }
/// and validates the decoded state.
QuantumState load_state(const std::string& path);

QuantumState parse_state(const nlohmann::json& doc, const std::string& context);

std::string format_number(double x);  // 17 significant digits, locale-free

void write_phase_dist_csv(const std::string& path, const PhaseFourier& dist, int points);
void write_joint_dist_csv(const std::string& path, const JointPhaseFourier& dist,
                          int points);

nlohmann::json report_to_json(const EntanglementReport& r);
nlohmann::json selftest_to_json(const SelfTestReport& r);

}  // namespace qphase
