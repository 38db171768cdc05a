#include <mmsim/errors.hpp>
#include <mmsim/hydrostatics.hpp>
#include <mmsim/kinematics.hpp>
#include <mmsim/sampling.hpp>
#include <mmsim/scenario.hpp>

#include <gtest/gtest.h>

#include <numbers>

using namespace mmsim;

namespace {

VehicleParams neutral_params(const Vec3 &r_s = Vec3::Zero()) {
    VehicleParams p;
    p.m_s = 25;
    p.m_p = 5;
    p.r_s = r_s;
    p.I_g = Mat3::Identity();
    p.displaced_volume = p.total_mass() / p.rho;
    return p;
}

Pose random_pose(Rng &rng) {
    Pose eta;
    eta.position = uniform_vec3(rng, -50, 50);
    eta.attitude = {uniform(rng, -3, 3), uniform(rng, -1.5, 1.5), uniform(rng, -3, 3)};
    return eta;
}

} // namespace

TEST(Environment, NeutralBuoyancyCheck) {
    const VehicleParams p = neutral_params();
    EXPECT_TRUE(make_env(p).neutrally_buoyant());
    VehicleParams heavy = p;
    heavy.displaced_volume *= 0.99;
    EXPECT_FALSE(make_env(heavy).neutrally_buoyant());
    EXPECT_THROW(restoring_full(make_env(heavy), heavy, Pose{}, Vec3::Zero()), NotNeutrallyBuoyant);
}

TEST(Restoring, CentredMassesLevelAttitude) {
    const VehicleParams p = neutral_params();
    const HydrostaticEnv env = make_env(p);
    const Vec9 g = restoring_full(env, p, Pose{}, Vec3::Zero());
    Vec9 expected = Vec9::Zero();
    expected(8) = -env.W_p;
    EXPECT_TRUE(g.isApprox(expected, 1e-15));
}

TEST(Restoring, ForwardMassPitchesNoseDown) {
    const VehicleParams p = neutral_params();
    const HydrostaticEnv env = make_env(p);
    const double x_p = 0.04;
    const Vec9 g = restoring_full(env, p, Pose{}, Vec3(x_p, 0, 0));
    EXPECT_TRUE(g.head<3>().isZero(0.0));
    EXPECT_TRUE(Vec3(g.segment<3>(3)).isApprox(Vec3(0, x_p * env.W_p, 0), 1e-15));
}

TEST(Restoring, SplitAddsUpExactly) {
    Rng rng(51);
    for (int i = 0; i < 1000; ++i) {
        const VehicleParams p = neutral_params(uniform_vec3(rng, -0.2, 0.2));
        const HydrostaticEnv env = make_env(p);
        const Pose eta = random_pose(rng);
        const Vec3 r = uniform_vec3(rng, -0.5, 0.5);
        const auto [g, g_p] = restoring_split(env, p, eta, r);
        EXPECT_EQ(g + g_p, restoring_full(env, p, eta, r));
    }
}

TEST(Restoring, SplitLimits) {
    Rng rng(52);
    VehicleParams p = neutral_params(Vec3(0.1, 0, 0.02));
    p.m_p = 0;
    p.displaced_volume = p.m_s / p.rho;
    const Pose eta = random_pose(rng);
    EXPECT_TRUE(restoring_split(make_env(p), p, eta, Vec3(1, 1, 1)).second.isZero(0.0));
    const VehicleParams centred = neutral_params();
    EXPECT_TRUE(restoring_split(make_env(centred), centred, eta, Vec3(1, 1, 1)).first.isZero(0.0));
}

TEST(Restoring, IndependentOfPosition) {
    Rng rng(53);
    const VehicleParams p = neutral_params(Vec3(0.05, 0, 0.01));
    const HydrostaticEnv env = make_env(p);
    Pose a = random_pose(rng), b = a;
    b.position = uniform_vec3(rng, -100, 100);
    EXPECT_EQ(restoring_full(env, p, a, Vec3(0.02, 0, 0.05)), restoring_full(env, p, b, Vec3(0.02, 0, 0.05)));
}

TEST(Restoring, BodyWeightKeepsMagnitude) {
    Rng rng(54);
    const VehicleParams p = neutral_params();
    const HydrostaticEnv env = make_env(p);
    for (int i = 0; i < 1000; ++i) {
        const Vec9 g = restoring_full(env, p, random_pose(rng), Vec3::Zero());
        EXPECT_NEAR(g.segment<3>(6).norm(), env.W_p, 1e-12 * env.W_p);
    }
}

TEST(Restoring, CompensatedDropsMovingMassRow) {
    Rng rng(55);
    const VehicleParams p = neutral_params(Vec3(0.05, 0, 0.01));
    const HydrostaticEnv env = make_env(p);
    const Pose eta = random_pose(rng);
    const Vec3 r(0.03, 0, 0.05);
    const Vec9 full = restoring_full(env, p, eta, r), comp = restoring_compensated(env, p, eta, r);
    EXPECT_EQ(comp.head<6>(), full.head<6>());
    EXPECT_TRUE(comp.tail<3>().isZero(0.0));
}

TEST(RemusRestoring, Examples) {
    const VehicleParams p = remus_params(remus100_source());
    const HydrostaticEnv env = make_env(p);
    EXPECT_TRUE(restoring_remus(env, Pose{}, Vec3::Zero()).isZero(0.0));
    const Vec9 g = restoring_remus(env, Pose{}, Vec3(0.05, 0, 0));
    Vec9 expected = Vec9::Zero();
    expected(4) = 0.05 * env.W_p;
    EXPECT_TRUE(g.isApprox(expected, 1e-15));
    // on the centreline below the origin the level vehicle feels no pitch torque
    EXPECT_TRUE(restoring_remus(env, Pose{}, Vec3(0, 0, 0.05)).isZero(0.0));
}

TEST(RemusRestoring, EqualsGenericCompensatedForm) {
    const VehicleParams p = remus_params(remus100_source());
    const HydrostaticEnv env = make_env(p);
    Rng rng(56);
    for (int i = 0; i < 500; ++i) {
        const Pose eta = random_pose(rng);
        const Vec3 r(uniform(rng, -0.05, 0.05), 0, 0.05);
        EXPECT_LT((restoring_remus(env, eta, r) - restoring_compensated(env, p, eta, r)).cwiseAbs().maxCoeff(),
                  1e-12);
    }
}
