#include <mmsim/hydrostatics.hpp>

#include <mmsim/errors.hpp>
#include <mmsim/kinematics.hpp>

#include <cmath>
#include <sstream>

namespace mmsim {

namespace {

void require_neutral(const HydrostaticEnv &env) {
    if (!env.neutrally_buoyant()) {
        std::ostringstream os;
        os.precision(17);
        os << "weight " << env.W_s + env.W_p << " N does not balance buoyancy " << env.B << " N";
        throw NotNeutrallyBuoyant(os.str());
    }
}

// Body-frame weight of a mass whose inertial weight is [0, 0, weight].
Vec3 body_weight(const Pose &eta, double weight) {
    return rotation(eta.attitude).transpose() * Vec3(0.0, 0.0, weight);
}

} // namespace

bool HydrostaticEnv::neutrally_buoyant() const {
    return std::abs(W_s + W_p - B) < 1e-9 * B;
}

HydrostaticEnv make_env(const VehicleParams &params) {
    HydrostaticEnv env;
    env.W_s = params.m_s * params.gravity;
    env.W_p = params.m_p * params.gravity;
    env.B = params.rho * params.gravity * params.displaced_volume;
    return env;
}

std::pair<Vec9, Vec9> restoring_split(const HydrostaticEnv &env, const VehicleParams &params,
                                      const Pose &eta, const Vec3 &r_p) {
    require_neutral(env);
    const Vec3 f_s = body_weight(eta, env.W_s);
    const Vec3 f_p = body_weight(eta, env.W_p);

    Vec9 g = Vec9::Zero();
    g.segment<3>(3) = -params.r_s.cross(f_s);

    Vec9 g_p = Vec9::Zero();
    g_p.segment<3>(3) = -r_p.cross(f_p);
    g_p.segment<3>(6) = -f_p;
    return {g, g_p};
}

Vec9 restoring_full(const HydrostaticEnv &env, const VehicleParams &params, const Pose &eta,
                    const Vec3 &r_p) {
    const auto [g, g_p] = restoring_split(env, params, eta, r_p);
    return g + g_p;
}

Vec9 restoring_compensated(const HydrostaticEnv &env, const VehicleParams &params, const Pose &eta,
                           const Vec3 &r_p) {
    Vec9 out = restoring_full(env, params, eta, r_p);
    out.segment<3>(6).setZero();
    return out;
}

Vec9 restoring_remus(const HydrostaticEnv &env, const Pose &eta, const Vec3 &r_p) {
    Vec9 out = Vec9::Zero();
    out.segment<3>(3) = -r_p.cross(body_weight(eta, env.W_p));
    return out;
}

} // namespace mmsim
