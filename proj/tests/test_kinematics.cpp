#include "support/oracles.hpp"

#include <mmsim/errors.hpp>
#include <mmsim/kinematics.hpp>
#include <mmsim/sampling.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace mmsim;

namespace {

constexpr double kPi = std::numbers::pi;

EulerAngles random_attitude(Rng &rng, double pitch_limit = 1.4) {
    return {uniform(rng, -kPi, kPi), uniform(rng, -pitch_limit, pitch_limit), uniform(rng, -kPi, kPi)};
}

} // namespace

TEST(Skew, ZeroVectorGivesZeroMatrix) {
    EXPECT_EQ(skew(Vec3::Zero()), Mat3::Zero());
}

TEST(Skew, ReproducesCrossProduct) {
    const Vec3 r = skew(Vec3(1, 2, 3)) * Vec3(4, 5, 6);
    EXPECT_EQ(r, Vec3(-3, 6, -3));
}

TEST(Skew, AntiCommutesAndIsExactlyAntisymmetric) {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 a = uniform_vec3(rng, -10, 10), b = uniform_vec3(rng, -10, 10);
        EXPECT_TRUE((skew(a) * b + skew(b) * a).isZero(1e-12));
        EXPECT_EQ(skew(a).transpose(), -skew(a));
    }
}

TEST(Rotation, IdentityAtZeroAttitude) {
    EXPECT_EQ(rotation({0, 0, 0}), Mat3::Identity());
}

TEST(Rotation, PitchNinetyDegreesPointsNoseDown) {
    const Vec3 x = rotation({0, kPi / 2, 0}) * Vec3::UnitX();
    EXPECT_NEAR(x(0), 0.0, 1e-15);
    EXPECT_NEAR(x(1), 0.0, 1e-15);
    EXPECT_NEAR(x(2), -1.0, 1e-15);
}

TEST(Rotation, IsAProperIsometry) {
    Rng rng(12);
    for (int i = 0; i < 10000; ++i) {
        const Mat3 R = rotation(random_attitude(rng, kPi / 2));
        EXPECT_LT((R.transpose() * R - Mat3::Identity()).cwiseAbs().maxCoeff(), 1e-13);
        EXPECT_NEAR(R.determinant(), 1.0, 1e-13);
    }
}

TEST(Rotation, MatchesRecoveredEulerAngles) {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const EulerAngles att = random_attitude(rng);
        const Vec3 back = oracle::euler_from_matrix(rotation(att));
        EXPECT_NEAR(back(0), att.phi, 1e-12);
        EXPECT_NEAR(back(1), att.theta, 1e-12);
        EXPECT_NEAR(back(2), att.psi, 1e-12);
    }
}

TEST(AngularTransform, IdentityAtZeroAttitude) {
    EXPECT_EQ(angular_transform({0, 0, 0}), Mat3::Identity());
}

TEST(AngularTransform, ThrowsInsideGuardBand) {
    EXPECT_THROW(angular_transform({0, kPi / 2 - 1e-12, 0}), SingularAttitude);
    EXPECT_THROW(angular_transform({0, -kPi / 2 + 1e-12, 0}), SingularAttitude);
    EXPECT_NO_THROW(angular_transform({0, kPi / 2 - 1e-3, 0}));
}

TEST(AngularTransform, MatchesComponentFormula) {
    Rng rng(14);
    for (int i = 0; i < 1000; ++i) {
        const EulerAngles att = random_attitude(rng);
        const Vec3 w = uniform_vec3(rng, -2, 2);
        const Vec3 expected = oracle::euler_rates(att.phi, att.theta, w);
        EXPECT_LT((angular_transform(att) * w - expected).cwiseAbs().maxCoeff(), 1e-12);
    }
}

// Attitude propagated exactly on SO(3) for constant body rate; the Euler
// angles read back from the matrix are differenced and compared to T(Theta) w.
TEST(AngularTransform, AgreesWithDifferencedAttitudeHistory) {
    Rng rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        const EulerAngles att0 = random_attitude(rng, 1.0);
        const Vec3 w = uniform_vec3(rng, -0.5, 0.5);
        const Mat3 R0 = rotation(att0);
        const double t = 0.3;
        auto angles_at = [&](double s) { return oracle::euler_from_matrix(R0 * oracle::rodrigues(w, s)); };
        const Vec3 mid = angles_at(t);
        const Vec3 rate = angular_transform({mid(0), mid(1), mid(2)}) * w;
        auto fd_error = [&](double h) {
            Vec3 d = angles_at(t + h) - angles_at(t - h);
            for (int k = 0; k < 3; ++k) {
                d(k) = wrap_angle(d(k));
            }
            return (d / (2 * h) - rate).norm();
        };
        const double e1 = fd_error(1e-3), e2 = fd_error(5e-4);
        EXPECT_LT(e1, 1e-5);
        // second-order: halving h divides the error by about four
        if (e1 > 1e-9) {
            EXPECT_NEAR(e1 / e2, 4.0, 0.5);
        }
    }
}

TEST(EtaDot, ZeroAttitudePassesVelocityThrough) {
    Vec6 nu;
    nu << 1, 2, 3, 0.1, 0.2, 0.3;
    EXPECT_TRUE(eta_dot(Pose{}, nu).isApprox(nu, 1e-15));
}

TEST(EtaDot, YawNinetyMapsSurgeToEast) {
    Pose eta;
    eta.attitude.psi = kPi / 2;
    Vec6 nu = Vec6::Zero();
    nu(0) = 1;
    const Vec6 d = eta_dot(eta, nu);
    EXPECT_NEAR(d(0), 0.0, 1e-15);
    EXPECT_NEAR(d(1), 1.0, 1e-15);
    EXPECT_NEAR(d(2), 0.0, 1e-15);
}

TEST(EtaDot, IsBlockDiagonal) {
    Rng rng(16);
    for (int i = 0; i < 100; ++i) {
        Pose eta;
        eta.position = uniform_vec3(rng, -5, 5);
        eta.attitude = random_attitude(rng);
        Vec6 lin = Vec6::Zero(), ang = Vec6::Zero();
        lin.head<3>() = uniform_vec3(rng, -2, 2);
        ang.tail<3>() = uniform_vec3(rng, -2, 2);
        EXPECT_TRUE(eta_dot(eta, lin).tail<3>().isZero(0.0));
        EXPECT_TRUE(eta_dot(eta, ang).head<3>().isZero(0.0));
    }
}

TEST(MovingMassKinematics, Examples) {
    EXPECT_EQ(r_p_dot(Vec3::Zero(), Vec6::Zero(), Vec3::Zero()), Vec3::Zero());
    EXPECT_EQ(r_p_dot(Vec3::Zero(), Vec6::Zero(), Vec3(1, 0, 0)), Vec3(1, 0, 0));
    Vec6 nu = Vec6::Zero();
    nu(5) = 1;
    EXPECT_TRUE(r_p_dot(Vec3(1, 0, 0), nu, Vec3::Zero()).isApprox(Vec3(0, -1, 0)));
}

TEST(MovingMassKinematics, Superposition) {
    Rng rng(17);
    for (int i = 0; i < 500; ++i) {
        const Vec3 r = uniform_vec3(rng, -1, 1), r2 = uniform_vec3(rng, -1, 1);
        Vec6 n1, n2;
        n1 << uniform_vec3(rng, -2, 2), uniform_vec3(rng, -2, 2);
        n2 << uniform_vec3(rng, -2, 2), uniform_vec3(rng, -2, 2);
        const Vec3 p1 = uniform_vec3(rng, -2, 2), p2 = uniform_vec3(rng, -2, 2);
        // linear in (nu, v_p) for fixed r_p
        EXPECT_TRUE((r_p_dot(r, n1 + n2, p1 + p2) - r_p_dot(r, n1, p1) - r_p_dot(r, n2, p2)).isZero(1e-12));
        // linear in r_p for fixed angular rate and no translation
        Vec6 spin = Vec6::Zero();
        spin.tail<3>() = n1.tail<3>();
        EXPECT_TRUE((r_p_dot(r + r2, spin, Vec3::Zero()) - r_p_dot(r, spin, Vec3::Zero()) -
                     r_p_dot(r2, spin, Vec3::Zero()))
                        .isZero(1e-12));
    }
}

TEST(WrapAngle, MapsIntoHalfOpenInterval) {
    EXPECT_DOUBLE_EQ(wrap_angle(kPi), kPi);
    EXPECT_DOUBLE_EQ(wrap_angle(-kPi), kPi);
    EXPECT_NEAR(wrap_angle(3 * kPi / 2), -kPi / 2, 1e-15);
    EXPECT_DOUBLE_EQ(wrap_angle(0.25), 0.25);
}
