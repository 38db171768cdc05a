#include <mmsim/kinematics.hpp>

#include <mmsim/errors.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace mmsim {

Mat3 skew(const Vec3 &a) {
    Mat3 s;
    s << 0.0, -a.z(), a.y(),
         a.z(), 0.0, -a.x(),
         -a.y(), a.x(), 0.0;
    return s;
}

Mat3 rotation(const EulerAngles &att) {
    const double cphi = std::cos(att.phi), sphi = std::sin(att.phi);
    const double cth = std::cos(att.theta), sth = std::sin(att.theta);
    const double cpsi = std::cos(att.psi), spsi = std::sin(att.psi);

    Mat3 r;
    r << cpsi * cth, -spsi * cphi + cpsi * sth * sphi, spsi * sphi + cpsi * cphi * sth,
         spsi * cth, cpsi * cphi + sphi * sth * spsi, -cpsi * sphi + sth * spsi * cphi,
         -sth, cth * sphi, cth * cphi;
    return r;
}

Mat3 angular_transform(const EulerAngles &att) {
    if (!(std::abs(att.theta) < std::numbers::pi / 2.0 - kSingularityGuard)) {
        throw SingularAttitude("pitch " + std::to_string(att.theta) +
                               " rad is within the Euler-angle singularity guard band");
    }
    const double cphi = std::cos(att.phi), sphi = std::sin(att.phi);
    const double cth = std::cos(att.theta), tth = std::tan(att.theta);

    Mat3 t;
    t << 1.0, sphi * tth, cphi * tth,
         0.0, cphi, -sphi,
         0.0, sphi / cth, cphi / cth;
    return t;
}

Vec6 eta_dot(const Pose &eta, const Vec6 &nu) {
    Vec6 out;
    out.head<3>() = rotation(eta.attitude) * nu.head<3>();
    out.tail<3>() = angular_transform(eta.attitude) * nu.tail<3>();
    return out;
}

Vec3 r_p_dot(const Vec3 &r_p, const Vec6 &nu, const Vec3 &v_p) {
    const Vec3 v = nu.head<3>();
    const Vec3 w = nu.tail<3>();
    return v_p - v - w.cross(r_p);
}

double wrap_angle(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double wrapped = std::fmod(angle + std::numbers::pi, two_pi);
    if (wrapped <= 0.0) {
        wrapped += two_pi;
    }
    return wrapped - std::numbers::pi;
}

EulerAngles wrap_angles(const EulerAngles &att) {
    return {wrap_angle(att.phi), wrap_angle(att.theta), wrap_angle(att.psi)};
}

} // namespace mmsim
