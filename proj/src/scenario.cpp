#include <mmsim/scenario.hpp>

#include <mmsim/errors.hpp>
#include <mmsim/hydrostatics.hpp>
#include <mmsim/woolsey.hpp>

#include <cmath>

namespace mmsim {

std::string to_string(Formulation f) {
    return f == Formulation::NewtonEuler ? "newton-euler" : "woolsey";
}

Formulation parse_formulation(std::string_view text) {
    if (text == "newton-euler") {
        return Formulation::NewtonEuler;
    }
    if (text == "woolsey") {
        return Formulation::Woolsey;
    }
    throw ValidationError("unknown formulation '" + std::string(text) + "' (expected newton-euler or woolsey)");
}

VehicleParams remus_params(const RemusSourceValues &source) {
    if (!(source.total_mass > 0.0)) {
        throw ValidationError("total_mass must be positive");
    }
    if (!(source.moving_mass_fraction > 0.0 && source.moving_mass_fraction < 0.5)) {
        throw ValidationError("moving_mass_fraction must lie in (0, 0.5)");
    }
    if (!(source.semi_axes.a > 0.0 && source.semi_axes.b > 0.0)) {
        throw ValidationError("ellipsoid semi-axes must be positive");
    }
    if (!(source.rho > 0.0)) {
        throw ValidationError("water density must be positive");
    }

    VehicleParams p;
    p.m_p = source.total_mass * source.moving_mass_fraction;
    p.m_s = source.total_mass - p.m_p;
    p.r_s = Vec3::Zero();
    p.I_g = ellipsoid_inertia(p.m_s, source.semi_axes.a, source.semi_axes.b);
    p.added_linear = -Vec3(source.X_udot, source.Y_vdot, source.Z_wdot);
    p.added_angular = -Vec3(source.K_pdot, source.M_qdot, source.N_rdot);
    p.rho = source.rho;
    p.gravity = source.gravity;
    p.displaced_volume = source.displaced_volume.value_or(source.total_mass / source.rho);
    p.semi_axes = source.semi_axes;
    validate(p);
    if (!make_env(p).neutrally_buoyant()) {
        throw ValidationError("displaced_volume does not make the vehicle neutrally buoyant");
    }
    return p;
}

RemusSourceValues remus100_source() {
    RemusSourceValues s;
    s.total_mass = 30.48;
    s.semi_axes = {1.33 / 2.0, 0.191 / 2.0};
    s.X_udot = -0.93;
    s.Y_vdot = -35.5;
    s.Z_wdot = -35.5;
    s.K_pdot = -0.0704;
    s.M_qdot = -4.88;
    s.N_rdot = -4.88;
    s.rho = 1030.0;
    s.gravity = 9.81;
    return s;
}

void ScenarioSpec::validate() const {
    if (!(duration > 0.0) || !std::isfinite(duration)) {
        throw ValidationError("scenario duration must be positive");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ValidationError("scenario dt must be positive");
    }
    if (!(depth_shallow > 0.0 && depth_shallow < depth_deep)) {
        throw ValidationError("depth thresholds must satisfy 0 < depth_shallow < depth_deep");
    }
    if (!std::isfinite(surge_force) || !std::isfinite(mass_force_magnitude)) {
        throw ValidationError("scenario forces must be finite");
    }
    rail.validate();
}

std::size_t ScenarioSpec::step_count() const {
    return static_cast<std::size_t>(std::llround(duration / dt));
}

ScenarioSpec remus_scenario() {
    ScenarioSpec spec;
    spec.initial_state.r_p = spec.rail.origin;
    return spec;
}

std::pair<Vec9, ForceScheduleState> force_schedule(const ScenarioSpec &spec, const SimState &state,
                                                   ForceScheduleState sched, double t) {
    const double z = state.eta.position.z();
    if (sched.phase == MassPhase::Forward && z >= spec.depth_deep) {
        sched = {MassPhase::Backward, t};
    } else if (sched.phase == MassPhase::Backward && z <= spec.depth_shallow) {
        sched = {MassPhase::Forward, t};
    }

    const double sign = sched.phase == MassPhase::Forward ? 1.0 : -1.0;
    GeneralizedForce tau;
    tau.linear = Vec3(spec.surge_force, 0.0, 0.0);
    tau.moving_mass = sign * spec.mass_force_magnitude * spec.rail.axis;
    return {tau.stacked(), sched};
}

ModelOptions scenario_model_options() {
    ModelOptions options;
    options.hydrostatics = HydrostaticsMode::Compensated;
    return options;
}

namespace {

TrajectoryRecord make_record(double t, const SimState &s, const Vec9 &tau, double kinetic, const RailSpec &rail) {
    TrajectoryRecord r;
    r.t = t;
    r.eta << s.eta.position, s.eta.attitude.phi, s.eta.attitude.theta, s.eta.attitude.psi;
    r.nu = s.nu;
    r.r_p = s.r_p;
    r.x_p = s.r_p.x();
    r.v_p = s.v_p;
    r.tau_X = tau(0);
    r.tau_Xp = rail.axis.dot(tau.segment<3>(6));
    r.kinetic = kinetic;
    return r;
}

} // namespace

ScenarioResult run_scenario(const VehicleParams &params, const ScenarioSpec &spec, Formulation formulation,
                            const ModelOptions &base_options) {
    spec.validate();
    const HydrostaticEnv env = make_env(params);
    ModelOptions options = base_options;
    if (!options.rail) {
        options.rail = spec.rail;
    }

    DerivativeFn derivative;
    if (formulation == Formulation::NewtonEuler) {
        derivative = [&](const SimState &s, const Vec9 &tau) { return state_derivative(params, env, s, tau, options); };
    } else {
        derivative = [&](const SimState &s, const Vec9 &tau) {
            return woolsey_state_derivative(params, env, s, tau, options);
        };
    }
    // The Woolsey model lumps the stationary mass at the CG; report its energy the same way.
    ModelOptions energy_options = options;
    energy_options.static_mass_at_cg = options.static_mass_at_cg || formulation == Formulation::Woolsey;

    const std::size_t steps = spec.step_count();
    ScenarioResult result;
    result.records.reserve(steps + 1);

    SimState state = project_to_rail(spec.initial_state, spec.rail);
    ForceScheduleState sched;
    try {
        for (std::size_t k = 0;; ++k) {
            const double t = static_cast<double>(k) * spec.dt;
            Vec9 tau;
            std::tie(tau, sched) = force_schedule(spec, state, sched, t);
            const double kinetic = energy_report(params, env, state, tau, energy_options).kinetic;
            result.records.push_back(make_record(t, state, tau, kinetic, spec.rail));
            if (k == steps) {
                break;
            }
            const ForceFn force = [&tau](double, const SimState &) { return tau; };
            state = rk4_step(derivative, force, state, t, spec.dt, spec.rail);
        }
    } catch (const Error &e) {
        result.error = e.what();
        result.error_name = e.name();
    }
    return result;
}

} // namespace mmsim
