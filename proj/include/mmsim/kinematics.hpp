#pragma once

// Attitude kinematics: skew operator, ZYX Euler rotation, Euler-rate
// transform, and the vehicle / moving-mass kinematic equations.

#include <mmsim/types.hpp>

namespace mmsim {

/// Guard band (rad) around theta = +-pi/2 where the Euler-rate transform is refused.
inline constexpr double kSingularityGuard = 1e-6;

/// S(a) with S(a) b = a x b.
Mat3 skew(const Vec3 &a);

/// Body-to-inertial rotation R(Theta) = Rz(psi) Ry(theta) Rx(phi).
Mat3 rotation(const EulerAngles &att);

/// T(Theta) such that Theta_dot = T(Theta) omega.
/// Throws SingularAttitude when |theta| >= pi/2 - kSingularityGuard.
Mat3 angular_transform(const EulerAngles &att);

/// eta_dot = diag(R, T) nu.
Vec6 eta_dot(const Pose &eta, const Vec6 &nu);

/// r_p_dot = v_p - v - S(omega) r_p, all in body frame.
Vec3 r_p_dot(const Vec3 &r_p, const Vec6 &nu, const Vec3 &v_p);

/// Wraps an angle to (-pi, pi]. Used for reporting only, never inside the state.
double wrap_angle(double angle);

EulerAngles wrap_angles(const EulerAngles &att);

} // namespace mmsim
