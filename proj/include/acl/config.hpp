#pragma once

// Run configuration: JSON schema, validation and the mapping onto EpisodeConfig.
// Every key is optional; unknown keys are rejected with their full path.

#include "acl/carrier.hpp"
#include "acl/common.hpp"
#include "acl/environment.hpp"
#include "acl/flight_control.hpp"
#include "acl/mission.hpp"
#include "acl/trim.hpp"

#include <json.hpp>  // vendored nlohmann::json

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace acl {

using Json = nlohmann::ordered_json;

inline constexpr double kApproachSpeedMin = 150.0;
inline constexpr double kApproachSpeedMax = 260.0;

enum class Scenario { case1, case2, case3, custom };

inline const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::case1: return "case1";
        case Scenario::case2: return "case2";
        case Scenario::case3: return "case3";
        case Scenario::custom: return "custom";
    }
    return "?";
}

inline EnvironmentFlags scenario_flags(Scenario s) {
    switch (s) {
        case Scenario::case2: return EnvironmentFlags::case2();
        case Scenario::case3: return EnvironmentFlags::case3();
        default: return EnvironmentFlags::case1();
    }
}

inline const char* turbulence_name(TurbulenceLevel l) {
    switch (l) {
        case TurbulenceLevel::low: return "low";
        case TurbulenceLevel::moderate: return "moderate";
        case TurbulenceLevel::high: return "high";
    }
    return "?";
}

struct DataPaths {
    std::string steady_axial;    // U_s / V_wod against X_c
    std::string steady_vertical; // W_s / V_wod against X_c
    std::string random_sigma;    // sigma / V_wod against X_c
    std::string random_tau;      // s against X_c
    std::string deck_motion;     // 12-channel SCONE-format series; empty: synthetic
};

struct RunConfig {
    std::vector<double> approach_speeds{225.0};
    std::vector<double> probe_speeds;  // below the supported band, down to the trim limit
    double glideslope_deg = -3.5;
    Scenario scenario = Scenario::case1;
    EnvironmentFlags flags = EnvironmentFlags::case1();
    TurbulenceLevel turbulence = TurbulenceLevel::low;
    std::string sea_state = "low-heave";  // or "calm"
    std::uint64_t deck_seed = 7;
    std::size_t n_runs = 50;
    std::uint64_t seed = 1;
    double dt = 0.005;
    unsigned workers = 0;
    std::string output_dir = "out";
    double time_cap = 20.0;
    double time_to_go = 16.0;
    double ship_speed_kn = 15.0;
    double sea_wind_kn = 5.4;
    double ship_pitch = 0.018;
    double pitch_frequency = 0.62;
    double shear_w20_base = 0.0;
    bool random_phase = true;
    bool random_deck_offset = true;
    bool deck_relative_trim = true;
    bool record_trajectory = false;
    AircraftParams aircraft;
    ControlGains gains;
    DeckGeometry deck;
    SuccessCriteria criteria;
    DataPaths data;
};

namespace config_detail {

class Reader {
public:
    Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw SchemaError(where() + ": expected an object");
    }

    /// Call after reading every known key; reports the first unknown one.
    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key())) throw SchemaError("unknown key: " + join(it.key()));
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    template <class F>
    void with(const std::string& key, F&& f) {
        seen_.insert(key);
        if (j_.contains(key)) f(j_.at(key), join(key));
    }

    void number(const std::string& key, double& out) {
        with(key, [&](const Json& v, const std::string& p) {
            if (!v.is_number()) throw SchemaError(p + ": expected a number");
            out = v.get<double>();
            if (!std::isfinite(out)) throw RangeError(p + ": non-finite value");
        });
    }
    template <class Int>
    void integer(const std::string& key, Int& out) {
        with(key, [&](const Json& v, const std::string& p) {
            if (!v.is_number_integer() && !v.is_number_unsigned()) throw SchemaError(p + ": expected an integer");
            if (v.is_number_integer() && v.get<long long>() < 0) throw RangeError(p + ": must be non-negative");
            out = static_cast<Int>(v.get<unsigned long long>());
        });
    }
    void boolean(const std::string& key, bool& out) {
        with(key, [&](const Json& v, const std::string& p) {
            if (!v.is_boolean()) throw SchemaError(p + ": expected true or false");
            out = v.get<bool>();
        });
    }
    void string(const std::string& key, std::string& out) {
        with(key, [&](const Json& v, const std::string& p) {
            if (!v.is_string()) throw SchemaError(p + ": expected a string");
            out = v.get<std::string>();
        });
    }
    void numbers(const std::string& key, std::vector<double>& out) {
        with(key, [&](const Json& v, const std::string& p) {
            if (!v.is_array()) throw SchemaError(p + ": expected an array of numbers");
            out.clear();
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (!v[i].is_number()) throw SchemaError(p + "[" + std::to_string(i) + "]: expected a number");
                out.push_back(v[i].get<double>());
            }
        });
    }
    void pid(const std::string& key, PidGains& g) {
        with(key, [&](const Json& v, const std::string& p) {
            Reader r(v, p);
            r.number("P", g.P);
            r.number("I", g.I);
            r.number("D", g.D);
            r.finish();
        });
    }

    std::string join(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
    std::string where() const { return path_.empty() ? "config" : path_; }

private:
    const Json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

inline void check(bool ok, const std::string& key, double value, const std::string& rule) {
    if (!ok) {
        std::ostringstream os;
        os << key << " = " << value << ": " << rule;
        throw RangeError(os.str());
    }
}

inline AngleUnit parse_unit(const std::string& s, const std::string& key) {
    if (s == "deg") return AngleUnit::deg;
    if (s == "rad") return AngleUnit::rad;
    throw SchemaError(key + ": expected \"deg\" or \"rad\"");
}

inline const char* unit_name(AngleUnit u) { return u == AngleUnit::deg ? "deg" : "rad"; }

}  // namespace config_detail

/// Validates ranges of an assembled configuration. Throws RangeError.
inline void validate(const RunConfig& c) {
    using config_detail::check;
    for (std::size_t i = 0; i < c.approach_speeds.size(); ++i)
        check(c.approach_speeds[i] >= kApproachSpeedMin && c.approach_speeds[i] <= kApproachSpeedMax,
              "approach_speeds[" + std::to_string(i) + "]", c.approach_speeds[i], "outside the supported 150-260 ft/s");
    for (std::size_t i = 0; i < c.probe_speeds.size(); ++i)
        check(c.probe_speeds[i] >= kTrimSpeedMin && c.probe_speeds[i] <= kTrimSpeedMax,
              "probe_speeds[" + std::to_string(i) + "]", c.probe_speeds[i], "outside the trim range 140-260 ft/s");
    check(c.glideslope_deg < 0.0 && c.glideslope_deg >= -10.0, "glideslope_deg", c.glideslope_deg, "must lie in [-10, 0)");
    check(c.n_runs >= 1, "n_runs", static_cast<double>(c.n_runs), "must be at least 1");
    check(c.dt > 0.0 && c.dt <= kMaxIntegrationStep, "dt", c.dt, "must lie in (0, 0.01] s");
    check(c.time_cap > 0.0, "time_cap", c.time_cap, "must be positive");
    check(c.time_to_go > 0.0 && c.time_to_go < c.time_cap, "time_to_go", c.time_to_go, "must lie in (0, time_cap)");
    check(c.ship_speed_kn >= 0.0 && c.ship_speed_kn <= 40.0, "ship_speed_kn", c.ship_speed_kn, "must lie in [0, 40]");
    check(c.sea_wind_kn >= 0.0 && c.sea_wind_kn <= 40.0, "sea_wind_kn", c.sea_wind_kn, "must lie in [0, 40]");
    check(c.ship_pitch >= 0.0 && c.ship_pitch <= 0.2, "ship_pitch", c.ship_pitch, "must lie in [0, 0.2] rad");
    check(c.pitch_frequency > 0.0, "pitch_frequency", c.pitch_frequency, "must be positive");
    check(c.shear_w20_base >= 0.0, "shear_w20_base", c.shear_w20_base, "must be non-negative");
    check(c.gains.bank_limit_deg > 0.0 && c.gains.bank_limit_deg <= 60.0, "gains.bank_limit_deg",
          c.gains.bank_limit_deg, "must lie in (0, 60]");
    check(c.gains.yaw_rate_limit > 0.0, "gains.yaw_rate_limit_deg", rad2deg(c.gains.yaw_rate_limit), "must be positive");
    check(c.gains.speed_gain >= 0.0, "gains.speed_gain", c.gains.speed_gain, "must be non-negative");
    check(c.gains.throttle_guard > 0.0 && c.gains.throttle_guard < 1.0, "gains.throttle_guard", c.gains.throttle_guard,
          "must lie in (0, 1)");
    check(c.criteria.max_altitude_error > 0.0, "criteria.max_altitude_error", c.criteria.max_altitude_error, "must be positive");
    check(c.criteria.max_glideslope_error > 0.0, "criteria.max_glideslope_error", c.criteria.max_glideslope_error,
          "must be positive");
    check(c.criteria.max_sink_rate > 0.0, "criteria.max_sink_rate", c.criteria.max_sink_rate, "must be positive");
    check(c.criteria.glideslope_window > 0.0, "criteria.glideslope_window", c.criteria.glideslope_window,
          "must be positive");
    c.aircraft.validate();
    c.deck.validate();
    check(c.deck.deck_height > 0.0, "deck.deck_height", c.deck.deck_height, "must be positive");
    if (c.sea_state != "calm") parse_sea_state(c.sea_state);
}

inline RunConfig parse_config(const Json& j) {
    using namespace config_detail;
    RunConfig c;
    Reader r(j, "");
    r.numbers("approach_speeds", c.approach_speeds);
    r.numbers("probe_speeds", c.probe_speeds);
    r.number("glideslope_deg", c.glideslope_deg);
    r.with("scenario", [&](const Json& v, const std::string& p) {
        const std::string s = v.is_string() ? v.get<std::string>() : "";
        if (s == "case1") c.scenario = Scenario::case1;
        else if (s == "case2") c.scenario = Scenario::case2;
        else if (s == "case3") c.scenario = Scenario::case3;
        else if (s == "custom") c.scenario = Scenario::custom;
        else throw SchemaError(p + ": expected case1, case2, case3 or custom");
    });
    c.flags = scenario_flags(c.scenario);
    r.with("components", [&](const Json& v, const std::string& p) {
        Reader cr(v, p);
        EnvironmentFlags& f = c.flags;
        cr.boolean("continuous", f.continuous);
        cr.boolean("discrete", f.discrete);
        cr.boolean("shear", f.shear);
        cr.boolean("periodic", f.periodic);
        cr.boolean("steady", f.steady);
        cr.boolean("free_air", f.free_air);
        cr.boolean("random_wake", f.random_wake);
        cr.boolean("ambient", f.ambient);
        cr.finish();
    });
    if (c.flags != scenario_flags(c.scenario)) c.scenario = Scenario::custom;
    r.with("turbulence", [&](const Json& v, const std::string& p) {
        const std::string s = v.is_string() ? v.get<std::string>() : "";
        if (s == "low") c.turbulence = TurbulenceLevel::low;
        else if (s == "moderate") c.turbulence = TurbulenceLevel::moderate;
        else if (s == "high") c.turbulence = TurbulenceLevel::high;
        else throw SchemaError(p + ": expected low, moderate or high");
    });
    r.string("sea_state", c.sea_state);
    r.integer("deck_seed", c.deck_seed);
    r.integer("n_runs", c.n_runs);
    r.integer("seed", c.seed);
    r.number("dt", c.dt);
    r.integer("workers", c.workers);
    r.string("output_dir", c.output_dir);
    r.number("time_cap", c.time_cap);
    r.number("time_to_go", c.time_to_go);
    r.number("ship_speed_kn", c.ship_speed_kn);
    r.number("sea_wind_kn", c.sea_wind_kn);
    r.number("ship_pitch", c.ship_pitch);
    r.number("pitch_frequency", c.pitch_frequency);
    r.number("shear_w20_base", c.shear_w20_base);
    r.boolean("random_phase", c.random_phase);
    r.boolean("random_deck_offset", c.random_deck_offset);
    r.boolean("deck_relative_trim", c.deck_relative_trim);
    r.boolean("record_trajectory", c.record_trajectory);

    r.with("aircraft", [&](const Json& v, const std::string& p) {
        Reader a(v, p);
        AircraftParams& ac = c.aircraft;
        a.number("wing_area", ac.wing_area);
        a.number("span", ac.span);
        a.number("mean_chord", ac.mean_chord);
        a.number("mass", ac.mass);
        a.number("max_thrust", ac.max_thrust);
        a.number("Ixx", ac.Ixx);
        a.number("Iyy", ac.Iyy);
        a.number("Izz", ac.Izz);
        a.number("air_density", ac.air_density);
        a.with("lift_curve", [&](const Json& lv, const std::string& lp) {
            const std::string s = lv.is_string() ? lv.get<std::string>() : "";
            if (s == "piecewise") ac.aero.lift_curve = LiftCurve::piecewise;
            else if (s == "linear_extended") ac.aero.lift_curve = LiftCurve::linear_extended;
            else throw SchemaError(lp + ": expected piecewise or linear_extended");
        });
        a.finish();
    });
    r.with("gains", [&](const Json& v, const std::string& p) {
        Reader g(v, p);
        ControlGains& cg = c.gains;
        g.pid("theta", cg.theta);
        g.pid("phi", cg.phi);
        g.pid("psi", cg.psi);
        g.pid("glideslope", cg.glideslope);
        g.pid("lateral", cg.lateral);
        g.pid("sideslip", cg.sideslip);
        g.number("speed_gain", cg.speed_gain);
        g.number("psi_gain_scale", cg.psi_gain_scale);
        g.number("sideslip_gain_scale", cg.sideslip_gain_scale);
        std::string unit;
        g.string("glideslope_output", unit);
        if (!unit.empty()) cg.glideslope_output = parse_unit(unit, g.join("glideslope_output"));
        unit.clear();
        g.string("lateral_output", unit);
        if (!unit.empty()) cg.lateral_output = parse_unit(unit, g.join("lateral_output"));
        g.number("bank_limit_deg", cg.bank_limit_deg);
        double yaw_rate_deg = rad2deg(cg.yaw_rate_limit);
        g.number("yaw_rate_limit_deg", yaw_rate_deg);
        cg.yaw_rate_limit = deg2rad(yaw_rate_deg);
        g.number("pitch_command_span_deg", cg.pitch_command_span_deg);
        g.number("throttle_guard", cg.throttle_guard);
        g.boolean("turn_coordination", cg.turn_coordination);
        g.finish();
    });
    r.with("deck", [&](const Json& v, const std::string& p) {
        Reader d(v, p);
        DeckGeometry& dg = c.deck;
        d.with("wires", [&](const Json& w, const std::string& wp) {
            if (!w.is_array() || w.size() != 4) throw SchemaError(wp + ": expected four numbers");
            for (std::size_t i = 0; i < 4; ++i) {
                if (!w[i].is_number()) throw SchemaError(wp + "[" + std::to_string(i) + "]: expected a number");
                dg.wires[i] = w[i].get<double>();
            }
        });
        d.number("ramp", dg.ramp);
        d.number("capture_margin", dg.capture_margin);
        d.number("safe_edge", dg.safe_edge);
        d.number("cop_forward", dg.cop_forward);
        d.number("angled_deck_deg", dg.angled_deck_deg);
        d.number("deck_height", dg.deck_height);
        d.finish();
    });
    r.with("criteria", [&](const Json& v, const std::string& p) {
        Reader k(v, p);
        k.number("max_altitude_error", c.criteria.max_altitude_error);
        k.number("max_glideslope_error", c.criteria.max_glideslope_error);
        k.number("max_sink_rate", c.criteria.max_sink_rate);
        k.number("glideslope_window", c.criteria.glideslope_window);
        k.finish();
    });
    r.with("data", [&](const Json& v, const std::string& p) {
        Reader d(v, p);
        d.string("steady_axial", c.data.steady_axial);
        d.string("steady_vertical", c.data.steady_vertical);
        d.string("random_sigma", c.data.random_sigma);
        d.string("random_tau", c.data.random_tau);
        d.string("deck_motion", c.data.deck_motion);
        d.finish();
    });
    r.finish();
    validate(c);
    return c;
}

inline RunConfig parse_config_text(const std::string& text) {
    // An empty or whitespace-only file means "all defaults".
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return parse_config(Json::object());
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(j);
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

/// Full configuration echo; parse_config(to_json(c)) reproduces c.
inline Json to_json(const RunConfig& c) {
    using config_detail::unit_name;
    auto pid = [](const PidGains& g) { return Json{{"P", g.P}, {"I", g.I}, {"D", g.D}}; };
    Json j;
    j["approach_speeds"] = c.approach_speeds;
    j["probe_speeds"] = c.probe_speeds;
    j["glideslope_deg"] = c.glideslope_deg;
    j["scenario"] = scenario_name(c.scenario);
    j["components"] = {{"continuous", c.flags.continuous}, {"discrete", c.flags.discrete},
                       {"shear", c.flags.shear},           {"periodic", c.flags.periodic},
                       {"steady", c.flags.steady},         {"free_air", c.flags.free_air},
                       {"random_wake", c.flags.random_wake}, {"ambient", c.flags.ambient}};
    j["turbulence"] = turbulence_name(c.turbulence);
    j["sea_state"] = c.sea_state;
    j["deck_seed"] = c.deck_seed;
    j["n_runs"] = c.n_runs;
    j["seed"] = c.seed;
    j["dt"] = c.dt;
    j["workers"] = c.workers;
    j["output_dir"] = c.output_dir;
    j["time_cap"] = c.time_cap;
    j["time_to_go"] = c.time_to_go;
    j["ship_speed_kn"] = c.ship_speed_kn;
    j["sea_wind_kn"] = c.sea_wind_kn;
    j["ship_pitch"] = c.ship_pitch;
    j["pitch_frequency"] = c.pitch_frequency;
    j["shear_w20_base"] = c.shear_w20_base;
    j["random_phase"] = c.random_phase;
    j["random_deck_offset"] = c.random_deck_offset;
    j["deck_relative_trim"] = c.deck_relative_trim;
    j["record_trajectory"] = c.record_trajectory;
    const AircraftParams& a = c.aircraft;
    j["aircraft"] = {{"wing_area", a.wing_area}, {"span", a.span}, {"mean_chord", a.mean_chord},
                     {"mass", a.mass}, {"max_thrust", a.max_thrust}, {"Ixx", a.Ixx}, {"Iyy", a.Iyy},
                     {"Izz", a.Izz}, {"air_density", a.air_density},
                     {"lift_curve", std::string(a.aero.lift_curve == LiftCurve::piecewise ? "piecewise" : "linear_extended")}};
    const ControlGains& g = c.gains;
    j["gains"] = {{"theta", pid(g.theta)},
                  {"phi", pid(g.phi)},
                  {"psi", pid(g.psi)},
                  {"glideslope", pid(g.glideslope)},
                  {"lateral", pid(g.lateral)},
                  {"sideslip", pid(g.sideslip)},
                  {"speed_gain", g.speed_gain},
                  {"psi_gain_scale", g.psi_gain_scale},
                  {"sideslip_gain_scale", g.sideslip_gain_scale},
                  {"glideslope_output", unit_name(g.glideslope_output)},
                  {"lateral_output", unit_name(g.lateral_output)},
                  {"bank_limit_deg", g.bank_limit_deg},
                  {"yaw_rate_limit_deg", rad2deg(g.yaw_rate_limit)},
                  {"pitch_command_span_deg", g.pitch_command_span_deg},
                  {"throttle_guard", g.throttle_guard},
                  {"turn_coordination", g.turn_coordination}};
    j["deck"] = {{"wires", c.deck.wires},
                 {"ramp", c.deck.ramp},
                 {"capture_margin", c.deck.capture_margin},
                 {"safe_edge", c.deck.safe_edge},
                 {"cop_forward", c.deck.cop_forward},
                 {"angled_deck_deg", c.deck.angled_deck_deg},
                 {"deck_height", c.deck.deck_height}};
    j["criteria"] = {{"max_altitude_error", c.criteria.max_altitude_error},
                     {"max_glideslope_error", c.criteria.max_glideslope_error},
                     {"max_sink_rate", c.criteria.max_sink_rate},
                     {"glideslope_window", c.criteria.glideslope_window}};
    j["data"] = {{"steady_axial", c.data.steady_axial},
                 {"steady_vertical", c.data.steady_vertical},
                 {"random_sigma", c.data.random_sigma},
                 {"random_tau", c.data.random_tau},
                 {"deck_motion", c.data.deck_motion}};
    return j;
}

/// Deck motion for a configuration: fitted from a file, synthetic, or none.
inline std::shared_ptr<const DeckMotionModel> deck_motion_for(const RunConfig& c) {
    if (!c.data.deck_motion.empty()) return std::make_shared<DeckMotionModel>(fit_deck_motion(load_deck_series(c.data.deck_motion)));
    if (c.sea_state == "calm") return nullptr;
    return std::make_shared<DeckMotionModel>(synthetic_deck_model(parse_sea_state(c.sea_state), c.deck_seed));
}

/// Episode template for one approach speed. Tables are read here, once.
inline EpisodeConfig episode_config(const RunConfig& c, double speed,
                                    std::shared_ptr<const DeckMotionModel> deck_motion) {
    EpisodeConfig e;
    e.approach_speed = speed;
    e.glideslope_deg = c.glideslope_deg;
    e.deck_relative_trim = c.deck_relative_trim;
    e.flags = c.flags;
    e.turbulence = c.turbulence;
    e.shear_w20_base = c.shear_w20_base;
    e.ship_speed_kn = c.ship_speed_kn;
    e.sea_wind_kn = c.sea_wind_kn;
    e.ship_pitch = c.ship_pitch;
    e.pitch_frequency = c.pitch_frequency;
    if (!c.data.steady_axial.empty()) e.steady.axial_ratio = load_table(c.data.steady_axial);
    if (!c.data.steady_vertical.empty()) e.steady.vertical_ratio = load_table(c.data.steady_vertical);
    if (!c.data.random_sigma.empty()) e.random.sigma_ratio = load_table(c.data.random_sigma);
    if (!c.data.random_tau.empty()) e.random.tau = load_table(c.data.random_tau);
    for (double tau : e.random.tau.values())
        if (!(tau > 0.0)) throw RangeError("random airwake tau must be positive");
    for (double s : e.random.sigma_ratio.values())
        if (!(s >= 0.0)) throw RangeError("random airwake sigma must be non-negative");
    e.deck_model = std::move(deck_motion);
    e.deck = c.deck;
    e.aircraft = c.aircraft;
    e.gains = c.gains;
    e.criteria = c.criteria;
    e.randomization.random_phase = c.random_phase;
    e.randomization.random_deck_offset = c.random_deck_offset;
    e.time_cap = c.time_cap;
    e.time_to_go = c.time_to_go;
    e.dt = c.dt;
    e.seed = c.seed;
    e.record_trajectory = c.record_trajectory;
    return e;
}

inline EpisodeConfig episode_config(const RunConfig& c, double speed) {
    return episode_config(c, speed, deck_motion_for(c));
}

}  // namespace acl
