#pragma once

// Kinetic energy, its gradients with respect to (v, omega, v_p), and the
// Coriolis-centripetal matrices derived from Kirchhoff's equations.

#include <mmsim/mass_model.hpp>
#include <mmsim/types.hpp>

namespace mmsim {

/// Partial derivatives of T = 1/2 nu'^T M' nu' with respect to v, omega and v_p.
struct EnergyGradients {
    Vec3 dT_dv = Vec3::Zero();
    Vec3 dT_dw = Vec3::Zero();
    Vec3 dT_dvp = Vec3::Zero();
};

double kinetic_energy(const Mat9 &m_total, const Vec9 &nu_prime);

/// Closed-form block rows of M'(r_p) nu'.
EnergyGradients energy_gradients(const VehicleParams &params, const Vec3 &r_p, const Vec9 &nu_prime);

/// Stationary part C(nu'): rigid body at r_s, added mass, and the m_p S(v) coupling.
Mat9 build_C(const VehicleParams &params, const Vec9 &nu_prime);

/// Moving-mass part C_P(nu', r_p).
///
/// Built so that (C + C_P) nu' reproduces the Kirchhoff terms for the mass
/// matrix M_S + M_P. The (2,2) block carries -S^2(r_p) omega, the moving-mass
/// analogue of the S(I_b omega) term in C.
Mat9 build_C_P(double m_p, const Vec3 &r_p, const Vec9 &nu_prime);

/// (C + C_P) nu'.
Vec9 coriolis_force(const VehicleParams &params, const Vec3 &r_p, const Vec9 &nu_prime);

/// The non-d/dt terms of Kirchhoff's equations assembled directly from the
/// energy gradients:
///   [S(w) dT/dv;  S(v) dT/dv + S(w) dT/dw + S(v_p) dT/dv_p;  S(w) dT/dv_p].
Vec9 kirchhoff_force(const EnergyGradients &grads, const Vec9 &nu_prime);

} // namespace mmsim
