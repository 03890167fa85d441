#include "acl/flight_dynamics.hpp"
#include "acl/trim.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace acl;

namespace {

AircraftState fly_open_loop(const TrimCondition& tc, double dt, double duration, const AircraftParams& p) {
    AircraftState s = trim_state(tc, 0.0, 500.0);
    const SurfaceDeflections surf{tc.elevator, 0.0, 0.0};
    const long n = std::lround(duration / dt);
    for (long i = 0; i < n; ++i) s = integrate_step(s, surf, tc.thrust, {}, p, dt);
    return s;
}

}  // namespace

TEST(Kinematics, BodyToNedIsARotation) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(-1.2, 1.2);
    for (int k = 0; k < 50; ++k) {
        const Eigen::Matrix3d R = body_to_ned(ang(rng), ang(rng), 3.0 * ang(rng));
        EXPECT_NEAR((R * R.transpose() - Eigen::Matrix3d::Identity()).norm(), 0.0, 1e-12);
        EXPECT_NEAR(R.determinant(), 1.0, 1e-12);
    }
}

TEST(Kinematics, AirDataFromRelativeWind) {
    AircraftState s;
    s.u = 200.0;
    BodyWind w;
    w.velocity = {-20.0, 0.0, -10.0};  // headwind and updraft raise airspeed and alpha
    const AirData ad = air_data(s, w, 0.002);
    EXPECT_NEAR(ad.airspeed, std::hypot(220.0, 10.0), 1e-12);
    EXPECT_NEAR(ad.alpha, rad2deg(std::atan2(10.0, 220.0)), 1e-12);
    EXPECT_NEAR(ad.beta, 0.0, 1e-12);
    EXPECT_NEAR(ad.qbar, 0.001 * ad.airspeed * ad.airspeed, 1e-9);
}

TEST(RigidBody, LevelForceBalanceGivesZeroAcceleration) {
    const AircraftParams p;
    AircraftState s;
    s.u = 200.0;
    ForcesMoments loads;
    loads.force = {0.0, 0.0, -p.mass * p.gravity};
    const AircraftState d = rigid_body_derivative(s, loads, p);
    EXPECT_NEAR(d.u, 0.0, 1e-12);
    EXPECT_NEAR(d.w, 0.0, 1e-12);
    EXPECT_NEAR(d.q, 0.0, 1e-12);
}

TEST(RigidBody, FreeDriftIsLinear) {
    AircraftParams p;
    p.gravity = 0.0;
    AircraftState s;
    s.u = 100.0;
    s.v = 5.0;
    s.w = -3.0;
    s.psi = 0.3;
    auto f = [&](const AircraftState::Vector& x) {
        return rigid_body_derivative(AircraftState::from_vector(x), {}, p).to_vector();
    };
    AircraftState::Vector x = s.to_vector();
    for (int i = 0; i < 1000; ++i) x = rk4_step(f, x, 0.01);
    const AircraftState e = AircraftState::from_vector(x);
    const Eigen::Vector3d v = body_to_ned(s) * s.body_velocity();
    EXPECT_NEAR(e.x_n, 10.0 * v.x(), 1e-9);
    EXPECT_NEAR(e.y_e, 10.0 * v.y(), 1e-9);
    EXPECT_NEAR(e.h, -10.0 * v.z(), 1e-9);
    EXPECT_DOUBLE_EQ(e.psi, s.psi);
    EXPECT_DOUBLE_EQ(e.theta, 0.0);
}

TEST(RigidBody, EulerGuardThrows) {
    AircraftState s;
    s.u = 100.0;
    s.theta = deg2rad(89.9);
    EXPECT_THROW(rigid_body_derivative(s, {}, AircraftParams{}), EulerSingularity);
}

TEST(Integrator, Rk4MatchesExponential) {
    using V1 = Eigen::Matrix<double, 1, 1>;
    V1 x = V1::Constant(1.0);
    for (int i = 0; i < 100; ++i) x = rk4_step([](const V1& y) -> V1 { return -y; }, x, 0.01);
    EXPECT_NEAR(x(0), std::exp(-1.0), 1e-8);
}

TEST(Integrator, StepSizeValidated) {
    EXPECT_THROW(integrate_step(AircraftState{}, {}, 0.0, {}, AircraftParams{}, 0.05), std::invalid_argument);
}

TEST(Integrator, NonFiniteStateReported) {
    AircraftState s;
    s.u = std::nan("");
    EXPECT_THROW(integrate_step(s, {}, 0.0, {}, AircraftParams{}, 0.005), Error);
}

TEST(Trim, StateHasNegligibleAccelerations) {
    const AircraftParams p;
    const TrimCondition tc = solve_trim(220.0, -3.5, p);
    const AircraftState s = trim_state(tc);
    const AircraftState d = state_derivative(s, {tc.elevator, 0.0, 0.0}, tc.thrust, {}, p);
    EXPECT_LT(std::abs(d.u), 1e-3);
    EXPECT_LT(std::abs(d.w), 1e-3);
    EXPECT_LT(std::abs(d.q), 1e-3);
    EXPECT_LT(std::abs(d.p), 1e-9);
    EXPECT_LT(std::abs(d.r), 1e-9);
    EXPECT_NEAR(flight_path_angle_deg(s), -3.5, 1e-9);
}

TEST(Trim, LiftSupportsWeightAt225) {
    const AircraftParams p;
    const TrimCondition tc = solve_trim(225.0, -3.5, p);
    const AircraftState s = trim_state(tc);
    const AirData ad = air_data(s, {}, p.air_density);
    const CoeffSet c = aero_coefficients({ad.alpha, ad.beta}, {}, {tc.elevator, 0.0, 0.0}, p.aero);
    const double lift = ad.qbar * p.wing_area * c.CL;
    EXPECT_NEAR(lift / (p.weight() * std::cos(deg2rad(-3.5))), 1.0, 0.02);
    // Along the path, lift plus the thrust component normal to it balances the weight.
    const double a = deg2rad(tc.alpha);
    EXPECT_NEAR((lift + tc.thrust * std::sin(a)) / (p.weight() * std::cos(deg2rad(-3.5))), 1.0, 0.02);
}

TEST(Integrator, HalvingStepConvergesInCalmAir) {
    const AircraftParams p;
    const TrimCondition tc = solve_trim(225.0, -3.5, p);
    const AircraftState a = fly_open_loop(tc, 0.01, 20.0, p);
    const AircraftState b = fly_open_loop(tc, 0.005, 20.0, p);
    const double d = std::sqrt(std::pow(a.x_n - b.x_n, 2) + std::pow(a.y_e - b.y_e, 2) + std::pow(a.h - b.h, 2));
    EXPECT_LT(d, 0.01);
}

TEST(Integrator, RepeatRunsAreBitIdentical) {
    const AircraftParams p;
    const TrimCondition tc = solve_trim(200.0, -3.5, p);
    const AircraftState a = fly_open_loop(tc, 0.005, 5.0, p);
    const AircraftState b = fly_open_loop(tc, 0.005, 5.0, p);
    EXPECT_EQ(a.to_vector(), b.to_vector());
}

TEST(Trajectory, CsvHasOneRowPerSample) {
    std::vector<TrajectorySample> rows(3);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].t = 0.005 * static_cast<double>(i);
    std::ostringstream os;
    write_trajectory_csv(os, rows);
    const std::string out = os.str();
    EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 4);
    EXPECT_EQ(out.rfind("t,x_n,y_e,h,", 0), 0u);
}
