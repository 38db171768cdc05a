#pragma once

#include <mmsim/mass_model.hpp>
#include <mmsim/types.hpp>

#include <utility>

namespace mmsim {

/// Weights and buoyancy of a vehicle. The centre of buoyancy sits at the body origin.
struct HydrostaticEnv {
    double W_s = 0.0;   ///< m_s g [N]
    double W_p = 0.0;   ///< m_p g [N]
    double B = 0.0;     ///< rho g nabla [N]
    Vec3 r_b = Vec3::Zero();

    bool neutrally_buoyant() const;
};

HydrostaticEnv make_env(const VehicleParams &params);

/// Restoring vector g'(eta, r_p) for a neutrally buoyant vehicle with CB at CO.
/// Sign follows the convention that g' appears on the left-hand side.
/// Throws NotNeutrallyBuoyant.
Vec9 restoring_full(const HydrostaticEnv &env, const VehicleParams &params, const Pose &eta,
                    const Vec3 &r_p);

/// (g(eta), g_P(eta, r_p)), the stationary and moving-mass parts of g'.
std::pair<Vec9, Vec9> restoring_split(const HydrostaticEnv &env, const VehicleParams &params,
                                      const Pose &eta, const Vec3 &r_p);

/// g' with a constraint force cancelling gravity on the moving mass: the
/// moving-mass row is zero, the torques are kept.
Vec9 restoring_compensated(const HydrostaticEnv &env, const VehicleParams &params, const Pose &eta,
                           const Vec3 &r_p);

/// Compensated restoring vector for a vehicle whose stationary mass sits at the origin.
Vec9 restoring_remus(const HydrostaticEnv &env, const Pose &eta, const Vec3 &r_p);

} // namespace mmsim
