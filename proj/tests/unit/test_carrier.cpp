#include "acl/carrier.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace acl;

namespace {

DeckMotionSeries heave_only(double duration, const std::vector<SinusoidTerm>& terms) {
    DeckMotionModel m;
    m.channels[2].terms = terms;
    return m.sample(duration, "test");
}

}  // namespace

TEST(DeckSeries, ThirtyMinutesAtTwentyHertz) {
    const DeckMotionSeries s = generate_deck_series(parse_sea_state("low-heave"), 1800.0, 1);
    EXPECT_EQ(s.size(), 36000u);
    EXPECT_NEAR(s.duration(), 1800.0, 1e-9);
    EXPECT_EQ(s.sea_state, "low-heave");
}

TEST(DeckSeries, RoundTripIsIdentical) {
    const DeckMotionSeries s = generate_deck_series(parse_sea_state("medium-roll"), 30.0, 5);
    std::stringstream io;
    write_deck_series(io, s);
    const DeckMotionSeries r = read_deck_series(io);
    ASSERT_EQ(r.size(), s.size());
    EXPECT_EQ(r.sea_state, "medium-roll");
    EXPECT_EQ(r.time, s.time);
    for (std::size_t k = 0; k < kDeckChannels; ++k) EXPECT_EQ(r.channels[k], s.channels[k]) << k;
}

TEST(DeckSeries, MissingChannelIsNamed) {
    std::stringstream io;
    io << "time,surge,sway,heave,roll,pitch,yaw,surge_rate,sway_rate,heave_rate,roll_rate,pitch_rate\n0,0,0,0,0,0,0,0,0,0,0,0\n";
    try {
        read_deck_series(io);
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("yaw_rate"), std::string::npos);
    }
}

TEST(DeckSeries, IrregularSamplingRejected) {
    DeckMotionSeries s = generate_deck_series(parse_sea_state("low"), 2.0, 1);
    s.time[10] += 0.01;
    std::stringstream io;
    write_deck_series(io, s);
    EXPECT_THROW(read_deck_series(io), NonUniformSampling);
}

TEST(DeckSeries, BadCellsRejected) {
    std::stringstream io;
    io << "time";
    for (const auto& n : deck_channel_names()) io << ',' << n;
    io << "\n0,1,2,3,4,5,6,7,8,9,10,11,12\n0.05,1,2,x,4,5,6,7,8,9,10,11,12\n";
    EXPECT_THROW(read_deck_series(io), FormatError);
}

TEST(SeaState, Labels) {
    EXPECT_EQ(parse_sea_state("high-roll").label(), "high-roll");
    EXPECT_EQ(parse_sea_state("medium").label(), "medium-heave");
    EXPECT_THROW(parse_sea_state("rough"), RangeError);
    EXPECT_THROW(parse_sea_state("low-pitch"), RangeError);
}

TEST(DeckFit, SingleSinusoidRecovered) {
    const double A = 0.8, w = 0.62, ph = 0.7;
    const DeckMotionSeries s = heave_only(300.0, {{A, w, ph}});
    FitOptions opt;
    opt.n_terms = 1;
    const DeckMotionModel m = fit_deck_motion(s, opt);
    ASSERT_EQ(m.channels[2].terms.size(), 1u);
    const SinusoidTerm& t = m.channels[2].terms[0];
    EXPECT_NEAR(std::abs(t.amplitude), A, 0.01 * A);
    EXPECT_NEAR(t.omega, w, 0.01 * w);
    // Compare phase through the fitted waveform, which is insensitive to sign conventions.
    const double phase = t.amplitude > 0 ? t.phase : t.phase + kPi;
    EXPECT_NEAR(std::remainder(phase - ph, 2.0 * kPi), 0.0, 0.01 * ph);
}

TEST(DeckFit, TwoToneResidualBelowOnePercent) {
    const DeckMotionSeries s = heave_only(600.0, {{0.5, 0.62, 0.3}, {0.2, 1.1, -1.2}});
    FitOptions opt;
    opt.n_terms = 2;
    const DeckMotionModel m = fit_deck_motion(s, opt);
    EXPECT_LT(m.channels[2].rms_residual, 0.01 * m.channels[2].rms_signal);
}

TEST(DeckFit, CalmSeriesGivesZeroAmplitudes) {
    const DeckMotionModel m = fit_deck_motion(DeckMotionModel::calm().sample(120.0));
    for (const auto& c : m.channels)
        for (const auto& t : c.terms) EXPECT_LE(std::abs(t.amplitude), 1e-9);
}

TEST(DeckFit, OptionsValidated) {
    const DeckMotionSeries s = heave_only(300.0, {{0.5, 0.6, 0.0}});
    FitOptions opt;
    opt.n_terms = 9;
    EXPECT_THROW(fit_deck_motion(s, opt), RangeError);
    EXPECT_THROW(fit_deck_motion(heave_only(30.0, {{0.5, 0.6, 0.0}})), RangeError);
}

TEST(DeckKinematics, CalmDeckAdvancesAtShipSpeed) {
    const DeckGeometry geo;
    const DeckState a = deck_state_at(DeckMotionModel::calm(), 0.0, 15.0, geo);
    const DeckState b = deck_state_at(DeckMotionModel::calm(), 10.0, 15.0, geo);
    EXPECT_NEAR((b.target - a.target).norm() / 10.0, 15.0 * 1.688, 0.01);
    EXPECT_NEAR(a.target_velocity.norm(), 25.32, 0.01);
    EXPECT_EQ(b.roll, 0.0);
    EXPECT_EQ(b.pitch, 0.0);
    EXPECT_EQ(b.yaw, 0.0);
    EXPECT_NEAR(a.target_altitude(), geo.deck_height, 1e-12);
    EXPECT_NEAR(a.target.head<2>().norm(), 0.0, 1e-9);
}

TEST(DeckKinematics, ModelRatesMatchFiniteDifferences) {
    const DeckMotionModel m = synthetic_deck_model(parse_sea_state("high-heave"), 11);
    const double h = 1e-4;
    double worst = 0.0;
    for (double t = 0.0; t < 120.0; t += 0.37)
        for (std::size_t d = 0; d < kDeckDof; ++d) {
            const double fd = (m.position(d, t + h) - m.position(d, t - h)) / (2.0 * h);
            worst = std::max(worst, std::abs(fd - m.rate(d, t)));
        }
    EXPECT_LT(worst, 1e-3);
}

TEST(DeckKinematics, TargetVelocityMatchesFiniteDifferences) {
    const DeckMotionModel m = synthetic_deck_model(parse_sea_state("medium-roll"), 2);
    const DeckGeometry geo;
    const double h = 1e-4;
    double worst = 0.0;
    for (double t = 1.0; t < 60.0; t += 0.61) {
        const Eigen::Vector3d fd =
            (deck_state_at(m, t + h, 15.0, geo).target - deck_state_at(m, t - h, 15.0, geo).target) / (2.0 * h);
        worst = std::max(worst, (fd - deck_state_at(m, t, 15.0, geo).target_velocity).norm());
    }
    EXPECT_LT(worst, 1e-3);
}

TEST(DeckKinematics, PitchAmplitudeBound) {
    DeckMotionModel m;
    m.channels[4].terms = {{0.018, 0.62, 0.4}};
    for (double t = 0.0; t < 100.0; t += 0.05) EXPECT_LE(std::abs(deck_state_at(m, t, 15.0).pitch), 0.018);
}

TEST(Touchdown, SafeEdgeBeyondLastWire) {
    const DeckGeometry geo;
    const TouchdownRecord ok = score_touchdown_point(geo.wires[3] + 3.0, 0.0, geo);
    EXPECT_EQ(ok.outcome, TouchdownClass::trap);
    EXPECT_EQ(ok.wire, 4);
    EXPECT_EQ(score_touchdown_point(geo.wires[3] + 6.0, 0.0, geo).outcome, TouchdownClass::bolter);
}

TEST(Touchdown, OnTargetIsATrap) {
    const TouchdownRecord r = score_touchdown_point(0.0, 0.0, DeckGeometry{});
    EXPECT_EQ(r.outcome, TouchdownClass::trap);
    EXPECT_EQ(r.x, 0.0);
    EXPECT_EQ(r.y, 0.0);
    EXPECT_EQ(r.wire, 3);
}

TEST(Touchdown, RampAndDeckEdge) {
    const DeckGeometry geo;
    EXPECT_EQ(score_touchdown_point(geo.ramp - 1.0, 0.0, geo).outcome, TouchdownClass::rampstrike);
    EXPECT_EQ(score_touchdown_point(0.0, 60.0, geo).outcome, TouchdownClass::out_of_deck);
    EXPECT_EQ(score_touchdown_point(-81.0, 0.0, geo).wire, 1);
    EXPECT_EQ(score_touchdown_point(-77.0, 0.0, geo).wire, 2);
}

TEST(Geometry, ValidationRejectsDisorderedWires) {
    DeckGeometry geo;
    geo.wires = {-40.0, -80.0, 0.0, 40.0};
    EXPECT_THROW(geo.validate(), RangeError);
}
