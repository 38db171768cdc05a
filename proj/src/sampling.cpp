#include <mmsim/sampling.hpp>

#include <mmsim/scenario.hpp>

#include <algorithm>

namespace mmsim {

double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec3 uniform_vec3(Rng &rng, double lo, double hi) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

Vec9 uniform_vec9(Rng &rng, double lo, double hi) {
    Vec9 out;
    for (Eigen::Index i = 0; i < 9; ++i) {
        out(i) = uniform(rng, lo, hi);
    }
    return out;
}

VehicleParams random_params(Rng &rng) {
    VehicleParams p;
    p.m_s = uniform(rng, 10.0, 60.0);
    p.m_p = uniform(rng, 0.05, 0.2) * p.m_s;
    p.r_s = uniform_vec3(rng, -0.1, 0.1);

    const Eigen::Quaterniond q(Eigen::Vector4d(uniform_vec3(rng, -1.0, 1.0).homogeneous()).normalized());
    const Mat3 rot = q.toRotationMatrix();
    const Vec3 principal = uniform_vec3(rng, 0.1, 5.0);
    p.I_g = rot * principal.asDiagonal() * rot.transpose();
    p.I_g = 0.5 * (p.I_g + p.I_g.transpose()).eval();

    p.added_linear = uniform_vec3(rng, 0.5, 40.0);
    p.added_angular = uniform_vec3(rng, 0.05, 5.0);
    const double scale = std::sqrt(p.added_linear.minCoeff() * p.added_angular.minCoeff()) / 4.0;
    p.added_coupling = scale * Mat3::NullaryExpr([&] { return uniform(rng, -1.0, 1.0); });

    p.rho = uniform(rng, 1000.0, 1030.0);
    p.gravity = 9.81;
    p.displaced_volume = p.total_mass() / p.rho;
    return p;
}

VehicleParams random_remus_like_params(Rng &rng) {
    RemusSourceValues s = remus100_source();
    s.total_mass *= uniform(rng, 0.8, 1.2);
    s.moving_mass_fraction = uniform(rng, 0.05, 1.0 / 6.0);
    s.semi_axes.a *= uniform(rng, 0.8, 1.2);
    s.semi_axes.b *= uniform(rng, 0.8, 1.2);
    s.X_udot *= uniform(rng, 0.5, 1.5);
    s.Y_vdot *= uniform(rng, 0.5, 1.5);
    s.Z_wdot *= uniform(rng, 0.5, 1.5);
    s.K_pdot *= uniform(rng, 0.5, 1.5);
    s.M_qdot *= uniform(rng, 0.5, 1.5);
    s.N_rdot *= uniform(rng, 0.5, 1.5);
    return remus_params(s);
}

SimState random_state(Rng &rng, double lo, double hi) {
    SimState s;
    s.eta.position = uniform_vec3(rng, lo, hi);
    s.eta.attitude = {uniform(rng, lo, hi), std::clamp(uniform(rng, lo, hi), -1.4, 1.4), uniform(rng, lo, hi)};
    s.r_p = uniform_vec3(rng, lo, hi);
    for (Eigen::Index i = 0; i < 6; ++i) {
        s.nu(i) = uniform(rng, lo, hi);
    }
    s.v_p = uniform_vec3(rng, lo, hi);
    return s;
}

} // namespace mmsim
