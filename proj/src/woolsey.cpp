#include <mmsim/woolsey.hpp>

#include <mmsim/coriolis.hpp>
#include <mmsim/errors.hpp>
#include <mmsim/kinematics.hpp>

namespace mmsim {

StateDerivative woolsey_state_derivative(const VehicleParams &params, const HydrostaticEnv &env,
                                         const SimState &state, const Vec9 &tau, const ModelOptions &options) {
    VehicleParams p = params;
    p.r_s = center_of_gravity(params, state.r_p);

    const Vec9 nu_prime = state.nu_prime();
    const Mat9 m_total = build_M_total(p, state.r_p);
    const Vec9 coriolis = kirchhoff_force(energy_gradients(p, state.r_p, nu_prime), nu_prime);

    Vec9 rhs = tau - coriolis - restoring(env, p, state.eta, state.r_p, options.hydrostatics);
    if (options.damping) {
        rhs -= options.damping(state);
    }

    Eigen::PartialPivLU<Mat9> lu(m_total);
    StateDerivative d;
    d.eta_dot = eta_dot(state.eta, state.nu);
    d.r_p_dot = options.freeze_moving_mass ? Vec3::Zero() : r_p_dot(state.r_p, state.nu, state.v_p);
    d.nu_prime_dot = lu.solve(rhs);
    if (!d.nu_prime_dot.allFinite()) {
        throw SingularMatrix("mass matrix is singular");
    }
    if (options.rail && !options.freeze_moving_mass) {
        const LinearSolve solve = [&lu](const Vec9 &b) { return Vec9(lu.solve(b)); };
        d.nu_prime_dot += rail_reaction(state, *options.rail, d.nu_prime_dot, solve).acceleration;
    }
    return d;
}

} // namespace mmsim
