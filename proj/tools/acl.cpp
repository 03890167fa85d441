// Command-line front end: trim, fly, campaign, sweep, deckgen, plot.
// Exit codes: 0 success, 1 validation error, 2 simulation divergence, 3 I/O error.

#include "acl/carrier.hpp"
#include "acl/config.hpp"
#include "acl/mission.hpp"
#include "acl/svg_plot.hpp"
#include "acl/trim.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace acl;

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr const char* kOutputDirEnv = "ACL_OUTPUT_DIR";

struct Divergence : Error {
    using Error::Error;
};

std::vector<double> parse_speed_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw SchemaError("--speeds: '" + item + "' is not a number");
        }
    }
    return out;
}

std::string speed_tag(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("write failed for " + path.string());
}

template <class F>
void write_stream(const fs::path& path, F&& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    f(out);
    if (!out) throw IoError("write failed for " + path.string());
}

/// Shared options and the resolved output directory.
struct Context {
    std::string config_path;
    std::string out_override;
    std::vector<std::string> argv;
    RunConfig config;
    fs::path out;

    void load() {
        config = config_path.empty() ? parse_config(Json::object()) : load_config(config_path);
        std::string dir = config.output_dir;
        if (const char* env = std::getenv(kOutputDirEnv); env && *env) dir = env;
        if (!out_override.empty()) dir = out_override;
        config.output_dir = dir;
        out = dir;
        std::error_code ec;
        fs::create_directories(out, ec);
        if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
    }

    void manifest(const std::string& command, const Json& extra = Json::object()) const {
        Json m;
        m["tool"] = "acl";
        m["version"] = kToolVersion;
        m["command"] = command;
        m["argv"] = argv;
        m["config"] = to_json(config);
        m["seed"] = config.seed;
        for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = it.value();
        write_text(out / "manifest.json", m.dump(2) + "\n");
    }
};

Json stats_json(double speed, const CampaignStats& st) {
    Json j;
    j["speed"] = speed;
    j["n_runs"] = st.n_runs;
    j["n_success"] = st.n_success;
    j["success_rate"] = st.success_rate;
    j["mu_x"] = st.mu_x;
    j["mu_y"] = st.mu_y;
    j["sigma_x"] = st.sigma_x;
    j["sigma_y"] = st.sigma_y;
    Json counts = Json::object();
    for (Outcome o : kAllOutcomes) counts[outcome_name(o)] = st.count(o);
    j["outcomes"] = counts;
    j["wires"] = st.wire_counts;
    return j;
}

void print_stats(double speed, const CampaignStats& st) {
    std::cout << std::fixed << std::setprecision(2) << "V_t " << speed << " ft/s: success " << st.n_success << "/"
              << st.n_runs << " (" << 100.0 * st.success_rate << "%), mu_x " << st.mu_x << ", mu_y " << st.mu_y
              << ", sigma_x " << st.sigma_x << ", sigma_y " << st.sigma_y << "\n  outcomes:";
    for (Outcome o : kAllOutcomes)
        if (st.count(o)) std::cout << ' ' << outcome_name(o) << '=' << st.count(o);
    std::cout << '\n';
}

int cmd_trim(Context& ctx, const std::string& speeds_arg, bool speeds_given, double gamma) {
    ctx.load();
    std::vector<double> speeds;
    if (speeds_given) {
        speeds = parse_speed_list(speeds_arg);
    } else {
        for (const auto& r : published_trims()) speeds.push_back(r.airspeed);
    }
    for (double v : speeds)
        if (!(v >= kTrimSpeedMin && v <= kTrimSpeedMax))
            throw RangeError("trim speed " + speed_tag(v) + " outside 140-260 ft/s");
    const auto rows = solve_trim_table(speeds, gamma, ctx.config.aircraft);
    std::ostringstream csv;
    csv << "speed,alpha,theta,elevator,thrust,throttle,residual,iterations,error,"
           "published_alpha,published_theta,published_elevator,published_thrust\n";
    csv << std::fixed;
    for (const auto& r : rows) {
        csv << std::setprecision(2) << r.airspeed << ',';
        if (r.trim) {
            const auto& t = *r.trim;
            csv << std::setprecision(4) << t.alpha << ',' << t.theta << ',' << t.elevator << ',' << std::setprecision(1)
                << t.thrust << ',' << std::setprecision(5) << t.throttle(ctx.config.aircraft) << ',' << std::scientific
                << std::setprecision(3) << t.residual_norm << std::fixed << ',' << t.iterations << ',';
        } else {
            csv << ",,,,,,," << '"' << r.error << '"';
        }
        csv << ',';
        if (auto p = published_trim(r.airspeed))
            csv << std::setprecision(2) << p->alpha << ',' << p->theta << ',' << p->elevator << ',' << std::setprecision(0)
                << p->thrust;
        else
            csv << ",,,";
        csv << '\n';
    }
    write_text(ctx.out / "trim.csv", csv.str());
    std::cout << csv.str();
    ctx.manifest("trim", {{"speeds", speeds}, {"gamma_deg", gamma}});
    return 0;
}

int cmd_fly(Context& ctx, double speed, std::uint64_t seed, bool seed_given, bool trajectory) {
    ctx.load();
    if (seed_given) ctx.config.seed = seed;
    if (speed == 0.0) speed = ctx.config.approach_speeds.empty() ? 225.0 : ctx.config.approach_speeds.front();
    if (!(speed >= kTrimSpeedMin && speed <= kTrimSpeedMax)) throw RangeError("--speed outside 140-260 ft/s");
    EpisodeConfig cfg = episode_config(ctx.config, speed);
    cfg.record_trajectory = trajectory || ctx.config.record_trajectory;
    const EpisodeResult r = run_episode(cfg);
    write_stream(ctx.out / "episode.csv", [&](std::ostream& os) { write_episode_csv(os, {r}); });
    if (cfg.record_trajectory)
        write_stream(ctx.out / "trajectory.csv", [&](std::ostream& os) { write_trajectory_csv(os, r.trajectory); });
    ctx.manifest("fly", {{"speed", speed}});
    std::cout << std::fixed << std::setprecision(3) << "outcome " << outcome_name(r.outcome);
    if (r.success()) std::cout << " (wire " << r.wire << ")";
    std::cout << "\n  touchdown x " << r.measures.touchdown.x << " ft, y " << r.measures.touchdown.y
              << " ft\n  altitude error " << r.measures.altitude_error << " ft, glideslope "
              << r.measures.final_glideslope << " deg, sink rate " << r.measures.sink_rate << " ft/s\n";
    if (r.outcome == Outcome::diverged) throw Divergence("episode diverged: " + r.error);
    return 0;
}

CampaignStats campaign_at(Context& ctx, double speed, std::shared_ptr<const DeckMotionModel> deck,
                          const std::string& suffix) {
    const EpisodeConfig cfg = episode_config(ctx.config, speed, std::move(deck));
    const CampaignResult res = run_campaign(cfg, ctx.config.n_runs, ctx.config.seed, ctx.config.workers);
    write_stream(ctx.out / ("episodes" + suffix + ".csv"), [&](std::ostream& os) { write_episode_csv(os, res.episodes); });
    std::ostringstream csv;
    write_episode_csv(csv, res.episodes);
    std::istringstream in(csv.str());
    const CsvTable table = read_csv(in);
    write_text(ctx.out / ("dispersion" + suffix + ".svg"),
               dispersion_svg(table, ctx.config.deck, "Landing dispersion, V_t = " + speed_tag(speed) + " ft/s"));
    write_text(ctx.out / ("altitude_error" + suffix + ".svg"),
               altitude_error_svg(table, ctx.config.criteria.max_altitude_error,
                                  "Final altitude error, V_t = " + speed_tag(speed) + " ft/s"));
    return res.stats;
}

int cmd_campaign(Context& ctx, double speed, std::size_t n, std::uint64_t seed, bool seed_given, int workers) {
    ctx.load();
    if (n) ctx.config.n_runs = n;
    if (seed_given) ctx.config.seed = seed;
    if (workers >= 0) ctx.config.workers = static_cast<unsigned>(workers);
    if (speed == 0.0) speed = ctx.config.approach_speeds.empty() ? 225.0 : ctx.config.approach_speeds.front();
    if (!(speed >= kTrimSpeedMin && speed <= kTrimSpeedMax)) throw RangeError("--speed outside 140-260 ft/s");
    const CampaignStats st = campaign_at(ctx, speed, deck_motion_for(ctx.config), "");
    write_text(ctx.out / "summary.json", stats_json(speed, st).dump(2) + "\n");
    ctx.manifest("campaign", {{"speed", speed}});
    print_stats(speed, st);
    return 0;
}

int cmd_sweep(Context& ctx, const std::string& speeds_arg, bool speeds_given, std::size_t n, std::uint64_t seed,
              bool seed_given, int workers) {
    ctx.load();
    if (n) ctx.config.n_runs = n;
    if (seed_given) ctx.config.seed = seed;
    if (workers >= 0) ctx.config.workers = static_cast<unsigned>(workers);
    std::vector<double> speeds;
    if (speeds_given) {
        speeds = parse_speed_list(speeds_arg);
        for (double v : speeds)
            if (!(v >= kTrimSpeedMin && v <= kTrimSpeedMax)) throw RangeError("sweep speed " + speed_tag(v) + " outside 140-260 ft/s");
    } else {
        speeds = ctx.config.approach_speeds;
        speeds.insert(speeds.end(), ctx.config.probe_speeds.begin(), ctx.config.probe_speeds.end());
    }
    const auto deck = deck_motion_for(ctx.config);
    std::ostringstream csv;
    csv << kSweepCsvHeader << '\n';
    Json summary = Json::array();
    for (double v : speeds) {
        const CampaignStats st = campaign_at(ctx, v, deck, "_" + speed_tag(v));
        write_sweep_row(csv, v, st);
        summary.push_back(stats_json(v, st));
        print_stats(v, st);
    }
    write_text(ctx.out / "sweep.csv", csv.str());
    write_text(ctx.out / "sweep.json", summary.dump(2) + "\n");
    std::istringstream in(csv.str());
    write_text(ctx.out / "sweep.svg", sweep_svg(read_csv(in)));
    ctx.manifest("sweep", {{"speeds", speeds}});
    return 0;
}

int cmd_deckgen(Context& ctx, const std::string& sea, double duration, std::uint64_t seed, const std::string& file) {
    ctx.load();
    if (!(duration > 0.0 && duration <= 7200.0)) throw RangeError("--duration must lie in (0, 7200] s");
    const DeckMotionSeries s = generate_deck_series(parse_sea_state(sea), duration, seed);
    const fs::path path = file.empty() ? ctx.out / "deck_motion.csv" : fs::path(file);
    save_deck_series(path.string(), s);
    ctx.manifest("deckgen", {{"sea_state", sea}, {"duration", duration}, {"deck_seed", seed}, {"file", path.string()}});
    std::cout << "wrote " << s.time.size() << " samples to " << path.string() << '\n';
    return 0;
}

int cmd_plot(Context& ctx, const std::string& episodes, const std::string& sweep) {
    ctx.load();
    if (episodes.empty() && sweep.empty()) throw SchemaError("plot needs --episodes and/or --sweep");
    if (!episodes.empty()) {
        const CsvTable t = load_csv(episodes);
        write_text(ctx.out / "dispersion.svg", dispersion_svg(t, ctx.config.deck));
        write_text(ctx.out / "altitude_error.svg", altitude_error_svg(t, ctx.config.criteria.max_altitude_error));
    }
    if (!sweep.empty()) write_text(ctx.out / "sweep.svg", sweep_svg(load_csv(sweep)));
    ctx.manifest("plot", {{"episodes", episodes}, {"sweep", sweep}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automated carrier-landing simulator"};
    app.require_subcommand(1);
    Context ctx;
    for (int i = 0; i < argc; ++i) ctx.argv.emplace_back(argv[i]);
    auto common = [&](CLI::App* sub) {
        sub->add_option("-c,--config", ctx.config_path, "JSON run configuration (defaults when omitted)");
        sub->add_option("-o,--out", ctx.out_override,
                        std::string("output directory (overrides ") + kOutputDirEnv + " and the config)");
    };

    std::string speeds_arg;
    double gamma = -3.5, speed = 0.0, duration = 1800.0;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    int workers = -1;
    bool trajectory = false;
    std::string sea = "low-heave", file, episodes, sweep_csv;

    auto* trim = app.add_subcommand("trim", "trim table over a speed list");
    common(trim);
    auto* trim_speeds = trim->add_option("--speeds", speeds_arg, "comma-separated speeds, ft/s (default: published table)");
    trim->add_option("--gamma", gamma, "flight-path angle, deg");

    auto* fly = app.add_subcommand("fly", "single closed-loop episode");
    common(fly);
    fly->add_option("--speed", speed, "approach speed, ft/s");
    auto* fly_seed = fly->add_option("--seed", seed, "episode seed");
    fly->add_flag("--trajectory", trajectory, "write trajectory.csv");

    auto* campaign = app.add_subcommand("campaign", "Monte Carlo campaign at one speed");
    common(campaign);
    campaign->add_option("--speed", speed, "approach speed, ft/s");
    campaign->add_option("-n,--runs", n, "episodes");
    auto* campaign_seed = campaign->add_option("--seed", seed, "campaign seed");
    campaign->add_option("-j,--workers", workers, "worker threads (0: all cores)");

    auto* sweep = app.add_subcommand("sweep", "campaigns over several approach speeds");
    common(sweep);
    auto* sweep_speeds = sweep->add_option("--speeds", speeds_arg, "comma-separated speeds, ft/s");
    sweep->add_option("-n,--runs", n, "episodes per speed");
    auto* sweep_seed = sweep->add_option("--seed", seed, "campaign seed");
    sweep->add_option("-j,--workers", workers, "worker threads (0: all cores)");

    auto* deckgen = app.add_subcommand("deckgen", "synthetic deck-motion series in the 20 Hz 12-channel format");
    common(deckgen);
    deckgen->add_option("--sea-state", sea, "low|medium|high[-heave|-roll]");
    deckgen->add_option("--duration", duration, "seconds");
    deckgen->add_option("--seed", seed, "generator seed");
    deckgen->add_option("--file", file, "output file (default: <out>/deck_motion.csv)");

    auto* plot = app.add_subcommand("plot", "SVG charts from campaign or sweep CSVs");
    common(plot);
    plot->add_option("--episodes", episodes, "episode CSV from campaign");
    plot->add_option("--sweep", sweep_csv, "sweep.csv from sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (trim->parsed()) return cmd_trim(ctx, speeds_arg, trim_speeds->count() > 0, gamma);
        if (fly->parsed()) return cmd_fly(ctx, speed, seed, fly_seed->count() > 0, trajectory);
        if (campaign->parsed()) return cmd_campaign(ctx, speed, n, seed, campaign_seed->count() > 0, workers);
        if (sweep->parsed())
            return cmd_sweep(ctx, speeds_arg, sweep_speeds->count() > 0, n, seed, sweep_seed->count() > 0, workers);
        if (deckgen->parsed()) return cmd_deckgen(ctx, sea, duration, seed, file);
        if (plot->parsed()) return cmd_plot(ctx, episodes, sweep_csv);
    } catch (const Divergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 3;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
