#include "acl/carrier.hpp"
#include "acl/config.hpp"
#include "acl/svg_plot.hpp"
#include "acl/trim.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;
using namespace acl;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("acl_cli_test_" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    fs::create_directories(p.parent_path());
    return p;
}

int run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + std::string(ACL_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, TrimOverPublishedSpeeds) {
    const fs::path out = scratch("trim");
    ASSERT_EQ(run("trim -o " + out.string()), 0);
    const CsvTable t = load_csv((out / "trim.csv").string());
    ASSERT_EQ(t.rows.size(), 11u);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        EXPECT_NEAR(t.number(i, t.column("alpha")), t.number(i, t.column("published_alpha")), 0.5);
        EXPECT_NEAR(t.number(i, t.column("theta")), t.number(i, t.column("published_theta")), 0.5);
        EXPECT_NEAR(t.number(i, t.column("elevator")), t.number(i, t.column("published_elevator")), 0.7);
        EXPECT_NEAR(t.number(i, t.column("thrust")) / t.number(i, t.column("published_thrust")), 1.0, 0.06);
    }
    EXPECT_TRUE(fs::exists(out / "manifest.json"));
}

TEST(Cli, TrimSingleAndEmptySpeedLists) {
    const fs::path out = scratch("trim_single");
    ASSERT_EQ(run("trim --speeds 225 -o " + out.string()), 0);
    const CsvTable t = load_csv((out / "trim.csv").string());
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_NEAR(t.number(0, t.column("alpha")), 7.25, 0.5);
    EXPECT_NEAR(t.number(0, t.column("theta")), 3.81, 0.5);
    ASSERT_EQ(run("trim --speeds \"\" -o " + out.string()), 0);
    EXPECT_EQ(lines(slurp(out / "trim.csv")), 1u);
}

TEST(Cli, CampaignWritesArtifacts) {
    const fs::path out = scratch("campaign");
    ASSERT_EQ(run("campaign -n 4 --seed 3 -j 2 -o " + out.string()), 0);
    std::size_t svgs = 0;
    for (const auto& e : fs::directory_iterator(out)) svgs += e.path().extension() == ".svg";
    EXPECT_EQ(svgs, 2u);
    EXPECT_EQ(lines(slurp(out / "episodes.csv")), 5u);
    const Json summary = Json::parse(slurp(out / "summary.json"));
    EXPECT_EQ(summary["n_runs"], 4);
    const Json manifest = Json::parse(slurp(out / "manifest.json"));
    EXPECT_EQ(manifest["seed"], 3);
    EXPECT_EQ(manifest["config"]["n_runs"], 4);
    EXPECT_TRUE(manifest.contains("version"));
}

TEST(Cli, OutputDirectoryFromEnvironment) {
    const fs::path out = scratch("env_out");
    ASSERT_EQ(run("trim --speeds 200", "ACL_OUTPUT_DIR=" + out.string()), 0);
    EXPECT_TRUE(fs::exists(out / "trim.csv"));
}

TEST(Cli, ValidationErrorsExitOne) {
    const fs::path out = scratch("bad");
    fs::create_directories(out);
    std::ofstream(out / "bad.json") << R"({"approach_speeds": [145]})";
    EXPECT_EQ(run("campaign -c " + (out / "bad.json").string() + " -o " + out.string()), 1);
    std::ofstream(out / "typo.json") << R"({"n_rns": 5})";
    EXPECT_EQ(run("campaign -c " + (out / "typo.json").string() + " -o " + out.string()), 1);
    EXPECT_EQ(run("fly --speed 90 -o " + out.string()), 1);
    EXPECT_EQ(run("nonsense"), 1);
}

TEST(Cli, MissingFilesExitThree) {
    const fs::path out = scratch("io");
    EXPECT_EQ(run("campaign -c /nonexistent/cfg.json -o " + out.string()), 3);
    EXPECT_EQ(run("plot --episodes /nonexistent/e.csv -o " + out.string()), 3);
}

TEST(Cli, DeckgenRoundTripsThroughLoader) {
    const fs::path out = scratch("deck");
    ASSERT_EQ(run("deckgen --duration 90 --seed 4 --sea-state medium-roll -o " + out.string()), 0);
    const DeckMotionSeries s = load_deck_series((out / "deck_motion.csv").string());
    EXPECT_EQ(s.size(), 1800u);
    EXPECT_EQ(s.sea_state, "medium-roll");
}

TEST(Cli, SweepAndPlot) {
    const fs::path out = scratch("sweep");
    ASSERT_EQ(run("sweep --speeds 180,220 -n 2 -o " + out.string()), 0);
    const CsvTable t = load_csv((out / "sweep.csv").string());
    EXPECT_EQ(t.rows.size(), 2u);
    EXPECT_TRUE(fs::exists(out / "sweep.svg"));
    const fs::path replot = scratch("replot");
    ASSERT_EQ(run("plot --sweep " + (out / "sweep.csv").string() + " --episodes " + (out / "episodes_180.csv").string() +
                  " -o " + replot.string()),
              0);
    EXPECT_EQ(slurp(replot / "sweep.svg"), sweep_svg(t));
}

TEST(Cli, FlyIsDeterministic) {
    const fs::path a = scratch("fly_a"), b = scratch("fly_b");
    ASSERT_EQ(run("fly --seed 11 -o " + a.string()), 0);
    ASSERT_EQ(run("fly --seed 11 -o " + b.string()), 0);
    EXPECT_EQ(slurp(a / "episode.csv"), slurp(b / "episode.csv"));
}
