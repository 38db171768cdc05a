#include <mmsim/coriolis.hpp>

#include <mmsim/kinematics.hpp>

namespace mmsim {

namespace {

struct Split {
    Vec3 v, w, vp;
};

Split split(const Vec9 &nu_prime) {
    return {nu_prime.segment<3>(0), nu_prime.segment<3>(3), nu_prime.segment<3>(6)};
}

} // namespace

double kinetic_energy(const Mat9 &m_total, const Vec9 &nu_prime) {
    return 0.5 * nu_prime.dot(m_total * nu_prime);
}

EnergyGradients energy_gradients(const VehicleParams &params, const Vec3 &r_p, const Vec9 &nu_prime) {
    const auto [v, w, vp] = split(nu_prime);
    const double m = params.total_mass();
    const double m_s = params.m_s;
    const double m_p = params.m_p;
    const Mat3 a11 = params.added_linear.asDiagonal();
    const Mat3 a22 = params.added_angular.asDiagonal();
    const Mat3 &a12 = params.added_coupling;
    const Mat3 s_rs = skew(params.r_s);
    const Mat3 s_rp = skew(r_p);

    EnergyGradients g;
    g.dT_dv = (m * Mat3::Identity() + a11) * v + (a12 - m_s * s_rs - m_p * s_rp) * w + m_p * vp;
    g.dT_dw = (m_s * s_rs + m_p * s_rp + a12.transpose()) * v +
              (origin_inertia(params) - m_p * s_rp * s_rp + a22) * w + m_p * s_rp * vp;
    g.dT_dvp = m_p * v - m_p * s_rp * w + m_p * vp;
    return g;
}

Mat9 build_C(const VehicleParams &params, const Vec9 &nu_prime) {
    const auto [v, w, vp] = split(nu_prime);
    const double m = params.total_mass();
    const double m_s = params.m_s;
    const Mat3 a11 = params.added_linear.asDiagonal();
    const Mat3 a22 = params.added_angular.asDiagonal();
    const Mat3 &a12 = params.added_coupling;
    const Vec3 &r_s = params.r_s;

    const Mat3 linear = -m * skew(v) - skew(a11 * v + a12 * w) - m_s * skew(w.cross(r_s));
    const Mat3 angular = -m_s * skew(r_s.cross(v)) - skew(a12.transpose() * v) -
                         skew(origin_inertia(params) * w) - skew(a22 * w);
    const Mat3 coupling = -params.m_p * skew(v);

    Mat9 c = Mat9::Zero();
    c.block<3, 3>(0, 3) = linear;
    c.block<3, 3>(3, 0) = linear;
    c.block<3, 3>(3, 3) = angular;
    c.block<3, 3>(3, 6) = coupling;
    c.block<3, 3>(6, 3) = coupling;
    return c;
}

Mat9 build_C_P(double m_p, const Vec3 &r_p, const Vec9 &nu_prime) {
    const auto [v, w, vp] = split(nu_prime);
    const Mat3 s_rp = skew(r_p);

    const Mat3 translational = -m_p * skew(w.cross(r_p) + vp);
    const Mat3 rotational = -m_p * skew(s_rp * v - s_rp * s_rp * w + s_rp * vp);

    Mat9 c = Mat9::Zero();
    c.block<3, 3>(0, 3) = translational;
    c.block<3, 3>(3, 0) = translational;
    c.block<3, 3>(3, 3) = rotational;
    c.block<3, 3>(3, 6) = translational;
    c.block<3, 3>(6, 3) = translational;
    return c;
}

Vec9 coriolis_force(const VehicleParams &params, const Vec3 &r_p, const Vec9 &nu_prime) {
    return (build_C(params, nu_prime) + build_C_P(params.m_p, r_p, nu_prime)) * nu_prime;
}

Vec9 kirchhoff_force(const EnergyGradients &grads, const Vec9 &nu_prime) {
    const auto [v, w, vp] = split(nu_prime);
    Vec9 out;
    out.segment<3>(0) = w.cross(grads.dT_dv);
    out.segment<3>(3) = v.cross(grads.dT_dv) + w.cross(grads.dT_dw) + vp.cross(grads.dT_dvp);
    out.segment<3>(6) = w.cross(grads.dT_dvp);
    return out;
}

} // namespace mmsim
