#pragma once

// Remus 100 configuration and the open-loop depth-switching experiment.

#include <mmsim/dynamics.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmsim {

enum class Formulation { NewtonEuler, Woolsey };

std::string to_string(Formulation f);
/// Accepts "newton-euler" and "woolsey". Throws ValidationError otherwise.
Formulation parse_formulation(std::string_view text);

/// Published vehicle values the Remus parameter set is derived from.
/// Hydrodynamic derivatives keep their sign (X_udot < 0).
struct RemusSourceValues {
    double total_mass = 0.0;
    double moving_mass_fraction = 1.0 / 6.0;
    SemiAxes semi_axes;
    double X_udot = 0.0;
    double Y_vdot = 0.0;
    double Z_wdot = 0.0;
    double K_pdot = 0.0;
    double M_qdot = 0.0;
    double N_rdot = 0.0;
    double rho = 1030.0;
    double gravity = 9.81;
    std::optional<double> displaced_volume;  ///< derived as m / rho when absent
};

/// Stationary mass at the origin, ellipsoid inertia, diagonal added mass,
/// m_p = fraction * m. Throws ValidationError / InvalidAddedMass.
VehicleParams remus_params(const RemusSourceValues &source);

/// Vehicle values from Allen et al. (2000), REMUS 100.
RemusSourceValues remus100_source();

struct ScenarioSpec {
    double duration = 500.0;
    double dt = 0.01;
    double surge_force = 1.0;
    double mass_force_magnitude = 0.5;
    double depth_deep = 20.0;
    double depth_shallow = 3.0;
    RailSpec rail{Vec3(0.0, 0.0, 0.05), Vec3::UnitX(), -0.05, 0.05};
    SimState initial_state;

    /// Throws ValidationError naming the violated invariant.
    void validate() const;
    std::size_t step_count() const;
};

/// The published open-loop test: zero initial conditions with the mass at the rail origin.
ScenarioSpec remus_scenario();

enum class MassPhase { Forward, Backward };

struct ForceScheduleState {
    MassPhase phase = MassPhase::Forward;
    double last_switch_time = 0.0;
};

/// Constant surge force plus a moving-mass force along the rail whose sign is
/// latched by depth: Backward once z >= depth_deep, Forward once z <= depth_shallow.
std::pair<Vec9, ForceScheduleState> force_schedule(const ScenarioSpec &spec, const SimState &state,
                                                   ForceScheduleState sched, double t);

struct TrajectoryRecord {
    double t = 0.0;
    Vec6 eta = Vec6::Zero();
    Vec6 nu = Vec6::Zero();
    Vec3 r_p = Vec3::Zero();
    double x_p = 0.0;
    Vec3 v_p = Vec3::Zero();
    double tau_X = 0.0;
    double tau_Xp = 0.0;
    double kinetic = 0.0;
};

struct ScenarioResult {
    std::vector<TrajectoryRecord> records;
    /// Set when the integration aborted; records then hold the partial run.
    std::optional<std::string> error;
    std::optional<std::string> error_name;
};

/// Model options used by the published experiment (gravity on the moving mass compensated).
ModelOptions scenario_model_options();

/// The scenario rail holds the moving mass unless options already name a rail.
ScenarioResult run_scenario(const VehicleParams &params, const ScenarioSpec &spec, Formulation formulation,
                            const ModelOptions &options = scenario_model_options());

} // namespace mmsim
