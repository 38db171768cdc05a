#pragma once

// Equations of motion for a vehicle with an internal moving mass, the linear
// solve for the accelerations, fixed-step RK4 and the rail constraint.

#include <mmsim/hydrostatics.hpp>
#include <mmsim/mass_model.hpp>
#include <mmsim/types.hpp>

#include <functional>
#include <optional>

namespace mmsim {

using Vec18 = Eigen::Matrix<double, 18, 1>;

struct SimState {
    Pose eta;
    Vec3 r_p = Vec3::Zero();
    Vec6 nu = Vec6::Zero();
    Vec3 v_p = Vec3::Zero();

    Vec9 nu_prime() const;

    /// Packed as [eta(6), r_p(3), nu(6), v_p(3)].
    Vec18 to_vector() const;
    static SimState from_vector(const Vec18 &x);
};

struct StateDerivative {
    Vec6 eta_dot = Vec6::Zero();
    Vec3 r_p_dot = Vec3::Zero();
    Vec9 nu_prime_dot = Vec9::Zero();

    Vec18 to_vector() const;
};

/// Straight body-fixed track for the moving mass: r_p = origin + s * axis, s in [stroke_min, stroke_max].
struct RailSpec {
    Vec3 origin = Vec3::Zero();
    Vec3 axis = Vec3::UnitX();
    double stroke_min = -0.05;
    double stroke_max = 0.05;

    /// Throws ValidationError unless the axis is a unit vector and stroke_min < stroke_max.
    void validate() const;
};

enum class HydrostaticsMode {
    Full,         ///< g' as derived, including gravity on the moving mass
    Compensated,  ///< gravity on the moving mass cancelled by a constraint force
    Off,
};

/// Optional damping term D(nu') nu', placed on the left-hand side.
using DampingHook = std::function<Vec9(const SimState &)>;

struct ModelOptions {
    HydrostaticsMode hydrostatics = HydrostaticsMode::Full;
    /// Holds r_p fixed (r_p_dot = 0) so that M' is constant.
    bool freeze_moving_mass = false;
    /// Evaluates every stationary-mass lever arm at the instantaneous CG instead of r_s.
    bool static_mass_at_cg = false;
    DampingHook damping;
    /// When set, the moving mass is held on this rail by a reaction force in
    /// the moving-mass rows (see rail_reaction()).
    std::optional<RailSpec> rail;
};

/// Parameters actually used at a given r_p (r_s replaced by r_g when static_mass_at_cg is set).
VehicleParams effective_params(const VehicleParams &params, const Vec3 &r_p, const ModelOptions &options);

/// Restoring vector for the selected hydrostatics mode.
Vec9 restoring(const HydrostaticEnv &env, const VehicleParams &params, const Pose &eta, const Vec3 &r_p,
               HydrostaticsMode mode);

/// Solves M' x = rhs. Cholesky first, pivoted LU for symmetric indefinite input.
/// Throws SingularMatrix if no solution meets the residual bound.
Vec9 solve_accelerations(const Mat9 &m_total, const Vec9 &rhs);

using LinearSolve = std::function<Vec9(const Vec9 &)>;

struct RailReaction {
    Vec9 force = Vec9::Zero();         ///< generalized force, non-zero only in the moving-mass rows
    Vec9 acceleration = Vec9::Zero();  ///< resulting change of nu'_dot
    bool on_stop = false;
};

/// Internal force between rail and moving mass. The lateral part keeps the
/// relative acceleration of the mass along the rail; while the mass rests on
/// a stop and is pushed outward, an axial part holds it there. The hull feels
/// the opposite force through the coupling in M'.
///
/// free_accel is M'^-1 times the right-hand side without the reaction, and
/// solve applies M'^-1.
RailReaction rail_reaction(const SimState &state, const RailSpec &rail, const Vec9 &free_accel,
                           const LinearSolve &solve);

/// Full state derivative. The mass, Coriolis and restoring terms are rebuilt
/// from the current r_p on every call.
StateDerivative state_derivative(const VehicleParams &params, const HydrostaticEnv &env, const SimState &state,
                                 const Vec9 &tau, const ModelOptions &options = {});

using DerivativeFn = std::function<StateDerivative(const SimState &, const Vec9 &)>;
using ForceFn = std::function<Vec9(double, const SimState &)>;

/// Classic four-stage Runge-Kutta step, followed by the rail projection when a rail is given.
SimState rk4_step(const DerivativeFn &derivative, const ForceFn &force, const SimState &state, double t, double dt,
                  const std::optional<RailSpec> &rail = std::nullopt);

/// Projects r_p onto the rail and clamps it to the stroke. The relative
/// velocity of the mass keeps only its axial part, which is zeroed when the
/// mass sits on a stop and is moving outward.
SimState project_to_rail(const SimState &state, const RailSpec &rail);

struct EnergyReport {
    double kinetic = 0.0;          ///< [J]
    double work_input_rate = 0.0;  ///< nu'^T (tau' - g') [W]
    double residual = 0.0;         ///< finite-difference dT/dt minus mean work rate over the last step [W]
                                   ///< (includes the power of any rail reaction)
};

struct PreviousSample {
    SimState state;
    double dt = 0.0;
};

EnergyReport energy_report(const VehicleParams &params, const HydrostaticEnv &env, const SimState &state,
                           const Vec9 &tau, const ModelOptions &options = {},
                           const std::optional<PreviousSample> &previous = std::nullopt);

} // namespace mmsim
