#pragma once

#include <Eigen/Dense>

namespace mmsim {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat9 = Eigen::Matrix<double, 9, 9>;

/// Roll, pitch, yaw in radians (ZYX convention).
struct EulerAngles {
    double phi = 0.0;
    double theta = 0.0;
    double psi = 0.0;
};

/// Inertial position (NED, z positive down) and attitude.
struct Pose {
    Vec3 position = Vec3::Zero();
    EulerAngles attitude;
};

/// Generalized force split (tau_v, tau_omega, tau_vp).
struct GeneralizedForce {
    Vec3 linear = Vec3::Zero();
    Vec3 angular = Vec3::Zero();
    Vec3 moving_mass = Vec3::Zero();

    Vec9 stacked() const {
        Vec9 out;
        out << linear, angular, moving_mass;
        return out;
    }
};

} // namespace mmsim
