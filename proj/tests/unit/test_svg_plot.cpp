#include "acl/mission.hpp"
#include "acl/svg_plot.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace acl;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
    return n;
}

CsvTable table(const std::string& text) {
    std::istringstream in(text);
    return read_csv(in);
}

}  // namespace

TEST(Csv, ParsesAndValidates) {
    const CsvTable t = table("a,b\n1,x\n2.5,nan\n");
    EXPECT_EQ(t.rows.size(), 2u);
    EXPECT_DOUBLE_EQ(t.number(1, t.column("a")), 2.5);
    EXPECT_TRUE(std::isnan(t.number(1, 1)));
    EXPECT_TRUE(std::isnan(t.number(0, 1)));
    EXPECT_THROW(t.column("c"), MissingData);
    EXPECT_THROW(table("a,b\n1\n"), FormatError);
    EXPECT_THROW(table(""), MissingData);
    EXPECT_THROW(load_csv("/nonexistent.csv"), IoError);
}

TEST(Dispersion, OnlyFailuresStillRenders) {
    const CsvTable t = table("outcome,x,y,altitude_error\nbolter,60,2,8\nrampstrike,-185,0,-1\naltitude_fail,nan,nan,18\n");
    const std::string svg = dispersion_svg(t, DeckGeometry{});
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_EQ(count(svg, "<circle"), 0u);
    EXPECT_NE(svg.find("traps 0, other touchdowns 2"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Dispersion, TrapsAreDots) {
    const CsvTable t = table("outcome,x,y\ntrap,1,0.5\ntrap,-3,-1\nbolter,50,0\n");
    const std::string svg = dispersion_svg(t, DeckGeometry{});
    EXPECT_EQ(count(svg, "<circle"), 2u);
    EXPECT_EQ(svg, dispersion_svg(t, DeckGeometry{}));
}

TEST(Dispersion, MissingColumnRejected) {
    EXPECT_THROW(dispersion_svg(table("outcome,x\ntrap,1\n"), DeckGeometry{}), MissingData);
}

TEST(AltitudeError, OneMarkerPerFiniteEpisode) {
    const CsvTable t = table("outcome,altitude_error\ntrap,10\ntrap,12\naltitude_fail,19\ntimeout,nan\n");
    const std::string svg = altitude_error_svg(t, 15.0);
    EXPECT_EQ(count(svg, "<circle"), 2u);
}

TEST(Sweep, ElevenSpeedsElevenPoints) {
    std::ostringstream os;
    os << kSweepCsvHeader << '\n';
    for (const auto& r : published_trims()) write_sweep_row(os, r.airspeed, CampaignStats{});
    const std::string svg = sweep_svg(table(os.str()));
    EXPECT_EQ(count(svg, "<circle"), 11u);
    EXPECT_EQ(count(svg, "<polyline"), 1u);
}

TEST(Sweep, EpisodeCsvFromCampaignPlots) {
    EpisodeConfig cfg;
    cfg.flags = EnvironmentFlags::none();
    const CampaignResult res = run_campaign(cfg, 2, 1, 1);
    std::ostringstream os;
    write_episode_csv(os, res.episodes);
    const CsvTable t = table(os.str());
    EXPECT_NO_THROW(dispersion_svg(t, DeckGeometry{}));
    EXPECT_NO_THROW(altitude_error_svg(t));
}
