#pragma once

#include <mmsim/types.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mmsim {

/// Ellipsoid hull geometry: forward semi-axis a, the two lateral semi-axes b.
struct SemiAxes {
    double a = 0.0;
    double b = 0.0;
};

/// Physical description of one vehicle with an internal moving point mass.
///
/// Added-mass inputs follow the usual sign flip of the hydrodynamic
/// derivatives, e.g. added_linear = (-X_udot, -Y_vdot, -Z_wdot). The
/// linear/angular coupling block A12 is added_coupling; A21 = A12^T.
struct VehicleParams {
    double m_s = 0.0;            ///< stationary mass [kg]
    double m_p = 0.0;            ///< moving point mass [kg]
    Vec3 r_s = Vec3::Zero();     ///< stationary-mass location, body frame [m]
    Mat3 I_g = Mat3::Zero();     ///< rigid-body inertia about its own CG [kg m^2]
    Vec3 added_linear = Vec3::Zero();
    Vec3 added_angular = Vec3::Zero();
    Mat3 added_coupling = Mat3::Zero();
    double rho = 1025.0;             ///< water density [kg/m^3]
    double displaced_volume = 0.0;   ///< [m^3]
    double gravity = 9.81;           ///< [m/s^2]
    std::optional<SemiAxes> semi_axes;

    double total_mass() const { return m_s + m_p; }
};

/// Checks the physical invariants. Throws ValidationError / InvalidAddedMass;
/// returns non-fatal warnings (e.g. a moving mass heavier than m_s / 5).
std::vector<std::string> validate(const VehicleParams &params);

/// r_g = (m_s r_s + m_p r_p) / (m_s + m_p).
Vec3 center_of_gravity(const VehicleParams &params, const Vec3 &r_p);

/// I_b = I_g - m_s S(r_s)^2, the stationary inertia shifted to the body origin.
Mat3 origin_inertia(const VehicleParams &params);

/// Stationary rigid-body mass matrix M_S.
Mat9 build_M_S(const VehicleParams &params);

/// Configuration-dependent moving-mass matrix M_P(r_p).
Mat9 build_M_P(double m_p, const Vec3 &r_p);

/// Added mass M_A; the moving-mass rows and columns are zero.
/// Throws InvalidAddedMass when the 6x6 block is not symmetric PSD.
Mat9 build_M_A(const VehicleParams &params);

/// M' = M_S + M_A + M_P(r_p). Throws NotPositiveDefinite if Cholesky fails.
Mat9 build_M_total(const VehicleParams &params, const Vec3 &r_p);

/// Solid ellipsoid inertia about its centre, semi-axes (a, b, b).
Mat3 ellipsoid_inertia(double m_s, double a, double b);

} // namespace mmsim
