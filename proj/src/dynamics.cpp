#include <mmsim/dynamics.hpp>

#include <mmsim/coriolis.hpp>
#include <mmsim/errors.hpp>
#include <mmsim/kinematics.hpp>

#include <algorithm>
#include <cmath>

namespace mmsim {

Vec9 SimState::nu_prime() const {
    Vec9 out;
    out << nu, v_p;
    return out;
}

Vec18 SimState::to_vector() const {
    Vec18 x;
    x << eta.position, eta.attitude.phi, eta.attitude.theta, eta.attitude.psi, r_p, nu, v_p;
    return x;
}

SimState SimState::from_vector(const Vec18 &x) {
    SimState s;
    s.eta.position = x.segment<3>(0);
    s.eta.attitude = {x(3), x(4), x(5)};
    s.r_p = x.segment<3>(6);
    s.nu = x.segment<6>(9);
    s.v_p = x.segment<3>(15);
    return s;
}

Vec18 StateDerivative::to_vector() const {
    Vec18 x;
    x << eta_dot, r_p_dot, nu_prime_dot;
    return x;
}

void RailSpec::validate() const {
    if (!origin.allFinite() || !axis.allFinite() || std::abs(axis.norm() - 1.0) > 1e-12) {
        throw ValidationError("rail axis must be a finite unit vector");
    }
    if (!(stroke_min < stroke_max)) {
        throw ValidationError("rail stroke_min must be smaller than stroke_max");
    }
}

VehicleParams effective_params(const VehicleParams &params, const Vec3 &r_p, const ModelOptions &options) {
    if (!options.static_mass_at_cg) {
        return params;
    }
    VehicleParams p = params;
    p.r_s = center_of_gravity(params, r_p);
    return p;
}

Vec9 restoring(const HydrostaticEnv &env, const VehicleParams &params, const Pose &eta, const Vec3 &r_p,
               HydrostaticsMode mode) {
    switch (mode) {
    case HydrostaticsMode::Full:
        return restoring_full(env, params, eta, r_p);
    case HydrostaticsMode::Compensated:
        return restoring_compensated(env, params, eta, r_p);
    case HydrostaticsMode::Off:
        break;
    }
    return Vec9::Zero();
}

Vec9 solve_accelerations(const Mat9 &m_total, const Vec9 &rhs) {
    const double bound = 1e-10 * (1.0 + rhs.lpNorm<Eigen::Infinity>());

    Eigen::LLT<Mat9> llt(m_total);
    if (llt.info() == Eigen::Success) {
        Vec9 x = llt.solve(rhs);
        if ((m_total * x - rhs).lpNorm<Eigen::Infinity>() <= bound) {
            return x;
        }
    }
    Eigen::FullPivLU<Mat9> lu(m_total);
    if (!lu.isInvertible()) {
        throw SingularMatrix("mass matrix is singular");
    }
    Vec9 x = lu.solve(rhs);
    if ((m_total * x - rhs).lpNorm<Eigen::Infinity>() > bound) {
        throw SingularMatrix("linear solve residual exceeds bound; mass matrix is ill-conditioned");
    }
    return x;
}

namespace {

// Contact band for the stroke limits: the projection leaves the mass exactly
// on the stop, stage states drift from it only by rounding.
constexpr double kStopTolerance = 1e-12;

RailReaction solve_constraints(const SimState &state, const Eigen::Matrix<double, 3, Eigen::Dynamic> &dirs,
                               const Vec9 &free_accel, const LinearSolve &solve) {
    const Vec3 w = state.nu.tail<3>();
    const Vec3 relative = r_p_dot(state.r_p, state.nu, state.v_p);
    const Eigen::Index k = dirs.cols();
    Eigen::Matrix<double, 9, Eigen::Dynamic> response(9, k), rows(9, k);
    Eigen::VectorXd bias(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const Vec3 d = dirs.col(i);
        Vec9 b = Vec9::Zero();
        b.segment<3>(6) = d;
        response.col(i) = solve(b);
        // d . r_p_ddot = rows^T nu'_dot - d . (w x r_p_dot)
        rows.col(i) << -d, d.cross(state.r_p), d;
        bias(i) = d.dot(w.cross(relative));
    }
    const Eigen::MatrixXd mobility = rows.transpose() * response;
    const Eigen::VectorXd lambda = mobility.partialPivLu().solve(bias - rows.transpose() * free_accel);
    RailReaction out;
    out.force.segment<3>(6) = dirs * lambda;
    out.acceleration = response * lambda;
    if (!out.acceleration.allFinite()) {
        throw SingularMatrix("rail reaction could not be resolved");
    }
    return out;
}

} // namespace

RailReaction rail_reaction(const SimState &state, const RailSpec &rail, const Vec9 &free_accel,
                           const LinearSolve &solve) {
    const Vec3 n1 = rail.axis.unitOrthogonal();
    const Vec3 n2 = rail.axis.cross(n1);
    Eigen::Matrix<double, 3, Eigen::Dynamic> dirs(3, 2);
    dirs << n1, n2;
    RailReaction lateral = solve_constraints(state, dirs, free_accel, solve);

    const Vec3 w = state.nu.tail<3>();
    const Vec3 relative = r_p_dot(state.r_p, state.nu, state.v_p);
    const Vec9 accel = free_accel + lateral.acceleration;
    const double s = rail.axis.dot(state.r_p - rail.origin);
    const double s_dot = rail.axis.dot(relative);
    const double s_ddot = rail.axis.dot(accel.segment<3>(6) - accel.segment<3>(0) - accel.segment<3>(3).cross(state.r_p) -
                                        w.cross(relative));
    const bool held_at_max = s >= rail.stroke_max - kStopTolerance && s_dot >= -kStopTolerance && s_ddot > 0.0;
    const bool held_at_min = s <= rail.stroke_min + kStopTolerance && s_dot <= kStopTolerance && s_ddot < 0.0;
    if (!held_at_max && !held_at_min) {
        return lateral;
    }
    Eigen::Matrix<double, 3, Eigen::Dynamic> all(3, 3);
    all << n1, n2, rail.axis;
    RailReaction held = solve_constraints(state, all, free_accel, solve);
    held.on_stop = true;
    return held;
}

StateDerivative state_derivative(const VehicleParams &params, const HydrostaticEnv &env, const SimState &state,
                                 const Vec9 &tau, const ModelOptions &options) {
    const VehicleParams p = effective_params(params, state.r_p, options);
    const Vec9 nu_prime = state.nu_prime();

    const Mat9 m_total = build_M_total(p, state.r_p);
    Vec9 rhs = tau - coriolis_force(p, state.r_p, nu_prime) -
               restoring(env, p, state.eta, state.r_p, options.hydrostatics);
    if (options.damping) {
        rhs -= options.damping(state);
    }

    StateDerivative d;
    d.eta_dot = eta_dot(state.eta, state.nu);
    d.r_p_dot = options.freeze_moving_mass ? Vec3::Zero() : r_p_dot(state.r_p, state.nu, state.v_p);
    d.nu_prime_dot = solve_accelerations(m_total, rhs);
    if (options.rail && !options.freeze_moving_mass) {
        const LinearSolve solve = [&m_total](const Vec9 &b) { return solve_accelerations(m_total, b); };
        d.nu_prime_dot += rail_reaction(state, *options.rail, d.nu_prime_dot, solve).acceleration;
    }
    return d;
}

SimState rk4_step(const DerivativeFn &derivative, const ForceFn &force, const SimState &state, double t, double dt,
                  const std::optional<RailSpec> &rail) {
    const auto eval = [&](double ts, const Vec18 &x) {
        const SimState s = SimState::from_vector(x);
        return derivative(s, force(ts, s)).to_vector();
    };

    const Vec18 x0 = state.to_vector();
    const Vec18 k1 = eval(t, x0);
    const Vec18 k2 = eval(t + 0.5 * dt, x0 + 0.5 * dt * k1);
    const Vec18 k3 = eval(t + 0.5 * dt, x0 + 0.5 * dt * k2);
    const Vec18 k4 = eval(t + dt, x0 + dt * k3);

    const SimState next = SimState::from_vector(x0 + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
    return rail ? project_to_rail(next, *rail) : next;
}

SimState project_to_rail(const SimState &state, const RailSpec &rail) {
    SimState out = state;
    const double s_raw = rail.axis.dot(state.r_p - rail.origin);
    const double s = std::clamp(s_raw, rail.stroke_min, rail.stroke_max);
    out.r_p = rail.origin + s * rail.axis;

    const Vec3 v = state.nu.head<3>();
    const Vec3 w = state.nu.tail<3>();
    const Vec3 relative = r_p_dot(state.r_p, state.nu, state.v_p);
    double s_dot = rail.axis.dot(relative);
    const bool at_stop = (s >= rail.stroke_max && s_dot > 0.0) || (s <= rail.stroke_min && s_dot < 0.0);
    if (!at_stop && out.r_p == state.r_p && relative == s_dot * rail.axis) {
        return out;
    }
    if (at_stop) {
        s_dot = 0.0;
    }
    out.v_p = v + w.cross(out.r_p) + s_dot * rail.axis;
    return out;
}

EnergyReport energy_report(const VehicleParams &params, const HydrostaticEnv &env, const SimState &state,
                           const Vec9 &tau, const ModelOptions &options,
                           const std::optional<PreviousSample> &previous) {
    const auto kinetic_at = [&](const SimState &s) {
        const VehicleParams p = effective_params(params, s.r_p, options);
        return kinetic_energy(build_M_S(p) + build_M_A(p) + build_M_P(p.m_p, s.r_p), s.nu_prime());
    };
    const auto power_at = [&](const SimState &s) {
        const VehicleParams p = effective_params(params, s.r_p, options);
        return s.nu_prime().dot(tau - restoring(env, p, s.eta, s.r_p, options.hydrostatics));
    };

    EnergyReport report;
    report.kinetic = kinetic_at(state);
    report.work_input_rate = power_at(state);
    if (previous && previous->dt > 0.0) {
        const double rate = (report.kinetic - kinetic_at(previous->state)) / previous->dt;
        report.residual = rate - 0.5 * (report.work_input_rate + power_at(previous->state));
    }
    return report;
}

} // namespace mmsim
