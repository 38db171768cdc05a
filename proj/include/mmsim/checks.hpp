#pragma once

// Built-in invariant suite behind `mmsim check`.

#include <mmsim/scenario.hpp>
#include <mmsim/trajectory_io.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace mmsim {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Randomized model invariants (Kirchhoff equivalence, energy-rate nullity,
/// gradient consistency, mass-matrix symmetry and definiteness, restoring
/// split) plus a short Remus run checked for the rail and schedule invariants.
std::vector<CheckResult> run_builtin_checks(std::uint64_t seed, std::size_t samples);

/// Post-hoc validation of a trajectory CSV: stroke limits on x_p and the
/// force schedule values.
CheckResult check_trajectory_csv(const CsvTable &table, const ScenarioSpec &spec);

/// Rail and schedule invariants on in-memory records.
CheckResult check_records(const std::vector<TrajectoryRecord> &records, const ScenarioSpec &spec);

} // namespace mmsim
