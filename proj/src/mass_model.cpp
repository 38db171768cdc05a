#include <mmsim/mass_model.hpp>

#include <mmsim/errors.hpp>
#include <mmsim/kinematics.hpp>

#include <cmath>
#include <sstream>

namespace mmsim {

namespace {

constexpr double kAddedMassTolerance = 1e-9;

bool all_finite(const VehicleParams &p) {
    return std::isfinite(p.m_s) && std::isfinite(p.m_p) && p.r_s.allFinite() && p.I_g.allFinite() &&
           p.added_linear.allFinite() && p.added_angular.allFinite() && p.added_coupling.allFinite() &&
           std::isfinite(p.rho) && std::isfinite(p.displaced_volume) && std::isfinite(p.gravity);
}

Eigen::Matrix<double, 6, 6> added_block(const VehicleParams &p) {
    Eigen::Matrix<double, 6, 6> a = Eigen::Matrix<double, 6, 6>::Zero();
    a.topLeftCorner<3, 3>() = p.added_linear.asDiagonal();
    a.topRightCorner<3, 3>() = p.added_coupling;
    a.bottomLeftCorner<3, 3>() = p.added_coupling.transpose();
    a.bottomRightCorner<3, 3>() = p.added_angular.asDiagonal();
    return a;
}

void check_added_mass(const VehicleParams &p) {
    const Eigen::Matrix<double, 6, 6> a = added_block(p);
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> eig(a);
    if (eig.eigenvalues().minCoeff() < -kAddedMassTolerance * scale) {
        std::ostringstream os;
        os << "added-mass matrix is not positive semi-definite (smallest eigenvalue "
           << eig.eigenvalues().minCoeff() << ")";
        throw InvalidAddedMass(os.str());
    }
}

} // namespace

std::vector<std::string> validate(const VehicleParams &params) {
    std::vector<std::string> warnings;
    if (!all_finite(params)) {
        throw ValidationError("vehicle parameters must be finite");
    }
    if (!(params.m_s > 0.0)) {
        throw ValidationError("stationary mass m_s must be positive");
    }
    if (params.m_p < 0.0) {
        throw ValidationError("moving mass m_p must be non-negative");
    }
    if (!(params.m_p < params.m_s)) {
        throw ValidationError("moving mass m_p must be smaller than the stationary mass m_s");
    }
    if (params.m_p > params.m_s / 5.0) {
        warnings.push_back("moving mass exceeds m_s/5; the slow, light actuator assumption is weak");
    }
    const double asym = (params.I_g - params.I_g.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(1.0, params.I_g.cwiseAbs().maxCoeff())) {
        throw ValidationError("rigid-body inertia I_g must be symmetric");
    }
    if (Eigen::LLT<Mat3>(params.I_g).info() != Eigen::Success) {
        throw ValidationError("rigid-body inertia I_g must be positive definite");
    }
    check_added_mass(params);
    if (!(params.rho > 0.0) || !(params.gravity > 0.0)) {
        throw ValidationError("water density and gravity must be positive");
    }
    if (params.displaced_volume < 0.0) {
        throw ValidationError("displaced volume must be non-negative");
    }
    if (params.semi_axes && !(params.semi_axes->a > 0.0 && params.semi_axes->b > 0.0)) {
        throw ValidationError("ellipsoid semi-axes must be positive");
    }
    return warnings;
}

Vec3 center_of_gravity(const VehicleParams &params, const Vec3 &r_p) {
    return (params.m_s * params.r_s + params.m_p * r_p) / (params.m_s + params.m_p);
}

Mat3 origin_inertia(const VehicleParams &params) {
    const Mat3 s = skew(params.r_s);
    return params.I_g - params.m_s * s * s;
}

Mat9 build_M_S(const VehicleParams &params) {
    const double m = params.total_mass();
    const Mat3 eye = Mat3::Identity();
    const Mat3 s_rs = skew(params.r_s);

    Mat9 ms = Mat9::Zero();
    ms.block<3, 3>(0, 0) = m * eye;
    ms.block<3, 3>(0, 3) = -params.m_s * s_rs;
    ms.block<3, 3>(0, 6) = params.m_p * eye;
    ms.block<3, 3>(3, 0) = params.m_s * s_rs;
    ms.block<3, 3>(3, 3) = origin_inertia(params);
    ms.block<3, 3>(6, 0) = params.m_p * eye;
    ms.block<3, 3>(6, 6) = params.m_p * eye;
    return ms;
}

Mat9 build_M_P(double m_p, const Vec3 &r_p) {
    const Mat3 s = skew(r_p);

    Mat9 mp = Mat9::Zero();
    mp.block<3, 3>(0, 3) = -m_p * s;
    mp.block<3, 3>(3, 0) = m_p * s;
    mp.block<3, 3>(3, 3) = -m_p * s * s;
    mp.block<3, 3>(3, 6) = m_p * s;
    mp.block<3, 3>(6, 3) = -m_p * s;
    return mp;
}

Mat9 build_M_A(const VehicleParams &params) {
    check_added_mass(params);
    Mat9 ma = Mat9::Zero();
    ma.topLeftCorner<6, 6>() = added_block(params);
    return ma;
}

Mat9 build_M_total(const VehicleParams &params, const Vec3 &r_p) {
    Mat9 m = build_M_S(params) + build_M_A(params) + build_M_P(params.m_p, r_p);
    if (Eigen::LLT<Mat9>(m).info() != Eigen::Success) {
        throw NotPositiveDefinite("total mass matrix M' is not positive definite");
    }
    return m;
}

Mat3 ellipsoid_inertia(double m_s, double a, double b) {
    const double axial = 2.0 / 5.0 * m_s * b * b;
    const double transverse = 1.0 / 5.0 * m_s * (a * a + b * b);
    return Vec3(axial, transverse, transverse).asDiagonal();
}

} // namespace mmsim
