#include "acl/config.hpp"

#include <gtest/gtest.h>

#include <string>

using namespace acl;

namespace {

template <class E>
std::string error_of(const std::string& text) {
    try {
        parse_config_text(text);
    } catch (const E& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Config, EmptyTextGivesDefaults) {
    const RunConfig c = parse_config_text("");
    ASSERT_EQ(c.approach_speeds.size(), 1u);
    EXPECT_DOUBLE_EQ(c.approach_speeds[0], 225.0);
    EXPECT_EQ(c.scenario, Scenario::case1);
    EXPECT_EQ(c.turbulence, TurbulenceLevel::low);
    EXPECT_EQ(c.n_runs, 50u);
    EXPECT_DOUBLE_EQ(c.dt, 0.005);
    EXPECT_EQ(c.flags, EnvironmentFlags::case1());
    EXPECT_EQ(parse_config_text("{}").n_runs, 50u);
}

TEST(Config, SpeedBelowSupportedBand) {
    const std::string msg = error_of<RangeError>(R"({"approach_speeds": [145]})");
    EXPECT_NE(msg.find("approach_speeds[0]"), std::string::npos) << msg;
    EXPECT_NO_THROW(parse_config_text(R"({"probe_speeds": [140]})"));
    EXPECT_FALSE(error_of<RangeError>(R"({"probe_speeds": [130]})").empty());
}

TEST(Config, CaseTwoDisablesShearAndDiscrete) {
    const RunConfig c = parse_config_text(R"({"scenario": "case2"})");
    EXPECT_FALSE(c.flags.shear);
    EXPECT_FALSE(c.flags.discrete);
    EXPECT_TRUE(c.flags.continuous);
    EXPECT_EQ(episode_config(c, 200.0, nullptr).flags, EnvironmentFlags::case2());
}

TEST(Config, ComponentOverrideBecomesCustom) {
    const RunConfig c = parse_config_text(R"({"scenario": "case1", "components": {"free_air": false}})");
    EXPECT_EQ(c.scenario, Scenario::custom);
    EXPECT_FALSE(c.flags.free_air);
    EXPECT_TRUE(c.flags.shear);
}

TEST(Config, UnknownKeysNamed) {
    EXPECT_EQ(error_of<SchemaError>(R"({"gains": {"psi": {"Q": 1}}})"), "unknown key: gains.psi.Q");
    EXPECT_NE(error_of<SchemaError>(R"({"n_run": 5})").find("n_run"), std::string::npos);
}

TEST(Config, TypeAndSyntaxErrors) {
    EXPECT_NE(error_of<SchemaError>(R"({"n_runs": "fifty"})").find("n_runs"), std::string::npos);
    EXPECT_FALSE(error_of<SchemaError>(R"({"scenario": "case9"})").empty());
    EXPECT_FALSE(error_of<SchemaError>("{ not json").empty());
    EXPECT_FALSE(error_of<RangeError>(R"({"dt": 0.05})").empty());
    EXPECT_FALSE(error_of<RangeError>(R"({"n_runs": 0})").empty());
}

TEST(Config, EchoRoundTrips) {
    const RunConfig c = parse_config_text(
        R"({"approach_speeds": [150, 180], "scenario": "case3", "seed": 17, "gains": {"speed_gain": 5,
            "glideslope_output": "rad"}, "deck": {"ramp": -170}})");
    const Json echo = to_json(c);
    EXPECT_EQ(to_json(parse_config(echo)), echo);
    EXPECT_EQ(echo["seed"], 17);
    EXPECT_EQ(echo["scenario"], "case3");
}

TEST(Config, MissingFileIsIoError) { EXPECT_THROW(load_config("/nonexistent/run.json"), IoError); }

TEST(Config, DataTablesLoad) {
    RunConfig c;
    c.data.steady_axial = std::string(ACL_SOURCE_DIR) + "/data/steady_axial.dat";
    c.data.steady_vertical = std::string(ACL_SOURCE_DIR) + "/data/steady_vertical.dat";
    c.data.random_sigma = std::string(ACL_SOURCE_DIR) + "/data/random_sigma.dat";
    c.data.random_tau = std::string(ACL_SOURCE_DIR) + "/data/random_tau.dat";
    const EpisodeConfig e = episode_config(c, 225.0, nullptr);
    const SteadyAirwakeTable d = default_steady_airwake();
    for (double x : {0.0, 75.0, 400.0, 1500.0, 5000.0}) {
        EXPECT_DOUBLE_EQ(e.steady.axial_ratio(x), d.axial_ratio(x));
        EXPECT_DOUBLE_EQ(e.steady.vertical_ratio(x), d.vertical_ratio(x));
        EXPECT_DOUBLE_EQ(e.random.sigma_ratio(x), default_random_airwake().sigma_ratio(x));
        EXPECT_DOUBLE_EQ(e.random.tau(x), default_random_airwake().tau(x));
    }
}

TEST(Config, CalmSeaHasNoDeckModel) {
    EXPECT_EQ(deck_motion_for(parse_config_text(R"({"sea_state": "calm"})")), nullptr);
    EXPECT_NE(deck_motion_for(parse_config_text("{}")), nullptr);
    EXPECT_THROW(deck_motion_for(parse_config_text(R"({"sea_state": "stormy"})")), RangeError);
}
