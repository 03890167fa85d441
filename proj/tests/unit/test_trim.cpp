#include "acl/trim.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace acl;

namespace {

void expect_matches_table(const TrimCondition& t, const PublishedTrim& p) {
    EXPECT_NEAR(t.alpha, p.alpha, 0.5) << p.airspeed;
    EXPECT_NEAR(t.theta, p.theta, 0.5) << p.airspeed;
    EXPECT_NEAR(t.elevator, p.elevator, 0.7) << p.airspeed;
    EXPECT_NEAR(t.thrust / p.thrust, 1.0, 0.06) << p.airspeed;
}

}  // namespace

TEST(Trim, PublishedRowAt220) {
    const TrimCondition t = solve_trim(220.0, -3.5, AircraftParams{});
    expect_matches_table(t, *published_trim(220.0));
    EXPECT_NEAR(t.alpha, 7.94, 0.5);
    EXPECT_NEAR(t.thrust, 3350.0, 0.06 * 3350.0);
}

TEST(Trim, PublishedRowAt150) {
    const TrimCondition t = solve_trim(150.0, -3.5, AircraftParams{});
    EXPECT_NEAR(t.alpha, 23.3, 0.5);
    EXPECT_NEAR(t.thrust, 8540.0, 0.06 * 8540.0);
}

TEST(Trim, WholePublishedTable) {
    std::vector<double> speeds;
    for (const auto& r : published_trims()) speeds.push_back(r.airspeed);
    const auto rows = solve_trim_table(speeds, -3.5, AircraftParams{});
    ASSERT_EQ(rows.size(), 11u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ASSERT_TRUE(rows[i].trim.has_value()) << rows[i].error;
        expect_matches_table(*rows[i].trim, published_trims()[i]);
    }
}

TEST(Trim, SimulationSetupSpeed) {
    const TrimCondition t = solve_trim(225.0, -3.5, AircraftParams{});
    EXPECT_NEAR(t.alpha, 7.25, 0.5);
    EXPECT_NEAR(t.theta, 3.81, 0.5);
}

TEST(Trim, ThetaIsAlphaPlusGamma) {
    const TrimCondition t = solve_trim(180.0, -3.5, AircraftParams{});
    EXPECT_DOUBLE_EQ(t.theta, t.alpha - 3.5);
    EXPECT_LT(t.residual_norm, 1e-6);
}

TEST(Trim, EmptySpeedListGivesNoRows) { EXPECT_TRUE(solve_trim_table({}, -3.5, AircraftParams{}).empty()); }

TEST(Trim, SpeedRangeEnforced) {
    EXPECT_THROW(solve_trim(139.0, -3.5, AircraftParams{}), RangeError);
    EXPECT_THROW(solve_trim(261.0, -3.5, AircraftParams{}), RangeError);
    const auto rows = solve_trim_table({100.0, 200.0}, -3.5, AircraftParams{});
    EXPECT_FALSE(rows[0].trim.has_value());
    EXPECT_FALSE(rows[0].error.empty());
    EXPECT_TRUE(rows[1].trim.has_value());
}

TEST(Trim, ThrustAboveEngineLimitReported) {
    AircraftParams p;
    p.max_thrust = 2000.0;
    EXPECT_THROW(solve_trim(150.0, -3.5, p), NoConvergence);
}

TEST(Trim, AlphaDecreasesWithSpeed) {
    std::vector<double> speeds;
    for (double v = 140.0; v <= 260.0; v += 10.0) speeds.push_back(v);
    const auto rows = solve_trim_table(speeds, -3.5, AircraftParams{});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_TRUE(rows[i].trim && rows[i - 1].trim);
        EXPECT_LT(rows[i].trim->alpha, rows[i - 1].trim->alpha);
    }
}

TEST(Trim, PublishedLookup) {
    EXPECT_TRUE(published_trim(215.0).has_value());
    EXPECT_FALSE(published_trim(225.0).has_value());
}
