#include "acl/airframe.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace acl;

namespace {

AeroOptions piecewise() { return {LiftCurve::piecewise, RateConvention::nondimensional}; }

}  // namespace

TEST(Coefficients, ConstantTermsAtZeroAngles) {
    const CoeffSet c = aero_coefficients({0.0, 0.0}, {}, {}, piecewise());
    EXPECT_NEAR(c.CD, 0.1423, 1e-12);
    EXPECT_NEAR(c.CL, 0.732, 1e-12);
    EXPECT_NEAR(c.Cm, -0.1885, 1e-12);
    EXPECT_EQ(c.CY, 0.0);
    EXPECT_EQ(c.Cl, 0.0);
    EXPECT_EQ(c.Cn, 0.0);
}

TEST(Coefficients, LiftBreakpointBelongsToLowerSegment) {
    // Hand evaluation: 0.0751*10 + 0.732 = 1.483; -0.00148*100 + 1.06 + 0.569 = 1.481.
    const double seg1 = 1.483, seg2 = 1.481;
    EXPECT_NEAR(aero_coefficients({10.0, 0.0}, {}, {}, piecewise()).CL, seg1, 1e-12);
    EXPECT_NEAR(aero_detail::lift_high(10.0, 0.0), seg2, 1e-12);
    // Just above the breakpoint the quadratic segment takes over.
    EXPECT_NEAR(aero_coefficients({10.0 + 1e-9, 0.0}, {}, {}, piecewise()).CL, seg2, 1e-6);
}

TEST(Coefficients, DragBreakpointKeepsDocumentedDiscontinuity) {
    // 0.0013*400 - 0.0876 + 0.1423 = 0.5747; -0.001392 + 0.946 - 0.358 = 0.586608.
    EXPECT_NEAR(aero_coefficients({20.0, 0.0}, {}, {}).CD, 0.5747, 1e-12);
    EXPECT_NEAR(aero_coefficients({20.0 + 1e-9, 0.0}, {}, {}).CD, 0.586608, 1e-6);
}

TEST(Coefficients, LinearExtendedLiftIgnoresSecondSegment) {
    const AeroOptions lin{LiftCurve::linear_extended, RateConvention::nondimensional};
    EXPECT_NEAR(aero_coefficients({20.0, 0.0}, {}, {}, lin).CL, 0.0751 * 20.0 + 0.732, 1e-12);
}

TEST(Coefficients, AlphaOutsideValidityThrows) {
    EXPECT_THROW(aero_coefficients({40.5, 0.0}, {}, {}), AlphaOutOfRange);
    EXPECT_THROW(aero_coefficients({-5.5, 0.0}, {}, {}), AlphaOutOfRange);
    EXPECT_NO_THROW(aero_coefficients({40.0, 0.0}, {}, {}));
    EXPECT_NO_THROW(aero_coefficients({-5.0, 0.0}, {}, {}));
}

TEST(Coefficients, SurfaceNormalization) {
    // Full aileron and rudder at alpha 0 reproduce the bracketed constants.
    const CoeffSet c = aero_coefficients({0.0, 0.0}, {}, {0.0, 25.0, 0.0});
    EXPECT_NEAR(c.CY, 0.039, 1e-12);
    EXPECT_NEAR(c.Cl, -0.0628, 1e-12);
    const CoeffSet r = aero_coefficients({0.0, 0.0}, {}, {0.0, 0.0, 30.0});
    EXPECT_NEAR(r.Cn, -0.0474, 1e-12);
    EXPECT_NEAR(r.Cl, 0.0124, 1e-12);
}

TEST(Forces, ZeroDynamicPressure) {
    const CoeffSet c = aero_coefficients({5.0, 2.0}, {}, {3.0, 4.0, 5.0});
    const ForcesMoments fm = forces_moments(c, 0.0, AircraftParams{}, {5.0, 2.0});
    EXPECT_EQ(fm.force.norm(), 0.0);
    EXPECT_EQ(fm.moment.norm(), 0.0);
}

TEST(Forces, UnitLiftDimensionalizes) {
    CoeffSet c;
    c.CL = 1.0;
    const ForcesMoments fm = forces_moments(c, 1.0, AircraftParams{}, {0.0, 0.0});
    EXPECT_NEAR(fm.force.norm(), 400.0, 1e-9);
    EXPECT_NEAR(fm.force.z(), -400.0, 1e-9);
}

TEST(Forces, DragOpposesAirRelativeVelocity) {
    CoeffSet c;
    c.CD = 1.0;
    const AeroAngles ang{12.0, 4.0};
    const ForcesMoments fm = forces_moments(c, 1.0, AircraftParams{}, ang);
    const double a = deg2rad(ang.alpha), b = deg2rad(ang.beta);
    const Eigen::Vector3d v_dir(std::cos(a) * std::cos(b), std::sin(b), std::sin(a) * std::cos(b));
    EXPECT_NEAR(fm.force.normalized().dot(v_dir), -1.0, 1e-12);
}

TEST(Engine, ThrottleMapping) {
    const AircraftParams p;
    EXPECT_DOUBLE_EQ(thrust(1.0, p), 11200.0);
    EXPECT_DOUBLE_EQ(thrust(0.0, p), 0.0);
    EXPECT_NEAR(thrust(0.299, p), 3350.0, 5.0);
    EXPECT_DOUBLE_EQ(thrust(1.7, p), 11200.0);
    EXPECT_DOUBLE_EQ(thrust(-0.2, p), 0.0);
}

TEST(Params, ValidationNamesTheField) {
    AircraftParams p;
    p.mass = 0.0;
    try {
        p.validate();
        FAIL() << "expected RangeError";
    } catch (const RangeError& e) {
        EXPECT_NE(std::string(e.what()).find("aircraft.mass"), std::string::npos);
    }
}

TEST(Actuator, UnitDcGain) {
    const double dt = 0.005;
    ActuatorBank bank(dt);
    ActuatorState s;
    const SurfaceDeflections cmd{5.0, -7.0, 3.0};
    for (int i = 0; i < static_cast<int>(2.0 / dt); ++i) s = bank.step(s, cmd);
    EXPECT_NEAR(s.elevator.position, 5.0, 5e-3);
    EXPECT_NEAR(s.aileron.position, -7.0, 7e-3);
    EXPECT_NEAR(s.rudder.position, 3.0, 3e-3);
}

TEST(Actuator, ElevatorOvershootMatchesSecondOrderFormula) {
    const double zeta = 0.509;
    const double oracle = std::exp(-kPi * zeta / std::sqrt(1.0 - zeta * zeta));
    ASSERT_NEAR(oracle, 0.155, 0.002);
    const double dt = 0.001;
    ActuatorBank bank(dt);
    ActuatorState s;
    double peak = 0.0;
    for (int i = 0; i < 2000; ++i) {
        s = bank.step(s, {1.0, 0.0, 0.0});
        peak = std::max(peak, s.elevator.position);
    }
    EXPECT_NEAR(peak - 1.0, oracle, 1e-3);
}

TEST(Actuator, EquilibriumStaysPut) {
    ActuatorBank bank(0.005);
    ActuatorState s;
    for (int i = 0; i < 1000; ++i) s = bank.step(s, {});
    EXPECT_EQ(s.elevator.position, 0.0);
    EXPECT_EQ(s.aileron.position, 0.0);
    EXPECT_EQ(s.rudder.position, 0.0);
}

TEST(Actuator, PositionLimitHolds) {
    ActuatorBank bank(0.005);
    ActuatorState s;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        s = bank.step(s, {100.0, -100.0, 100.0});
        worst = std::max({worst, std::abs(s.elevator.position) - 24.0, std::abs(s.aileron.position) - 25.0,
                          std::abs(s.rudder.position) - 30.0});
    }
    EXPECT_LE(worst, 0.0);
    EXPECT_DOUBLE_EQ(s.rudder.position, 30.0);
}

TEST(Actuator, StepSizeValidated) {
    EXPECT_THROW(ActuatorBank(0.02), std::invalid_argument);
    EXPECT_THROW(ActuatorBank(0.0), std::invalid_argument);
}
