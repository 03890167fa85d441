#pragma once

/**
 * Landing episodes and Monte Carlo campaigns.
 *
 * World frame: NED with the approach centerline along north; the touchdown
 * target starts at (0, 0, -deck_height). The approach begins with the hook on
 * the glideslope at the configured range astern of the target.
 */

#include "acl/airframe.hpp"
#include "acl/carrier.hpp"
#include "acl/common.hpp"
#include "acl/environment.hpp"
#include "acl/flight_control.hpp"
#include "acl/flight_dynamics.hpp"
#include "acl/trim.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <deque>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace acl {

enum class Outcome { trap, bolter, rampstrike, altitude_fail, glideslope_fail, sinkrate_fail, timeout, out_of_deck, diverged };

inline const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::trap: return "trap";
        case Outcome::bolter: return "bolter";
        case Outcome::rampstrike: return "rampstrike";
        case Outcome::altitude_fail: return "altitude_fail";
        case Outcome::glideslope_fail: return "glideslope_fail";
        case Outcome::sinkrate_fail: return "sinkrate_fail";
        case Outcome::timeout: return "timeout";
        case Outcome::out_of_deck: return "out_of_deck";
        case Outcome::diverged: return "diverged";
    }
    return "unknown";
}

inline constexpr std::array<Outcome, 9> kAllOutcomes{Outcome::trap,          Outcome::bolter,
                                                     Outcome::rampstrike,    Outcome::altitude_fail,
                                                     Outcome::glideslope_fail, Outcome::sinkrate_fail,
                                                     Outcome::timeout,       Outcome::out_of_deck,
                                                     Outcome::diverged};

struct SuccessCriteria {
    double max_altitude_error = 15.0;    // ft, ramp clearance must lie in (0, max)
    double max_glideslope_error = 5.0;   // deg
    double max_sink_rate = 12.0;         // ft/s
    double glideslope_window = 1.0;      // s averaged before touchdown
};

/// Uniform integer ranges of the per-episode randomization.
struct Randomization {
    std::array<int, 2> wind_direction{0, 180};          // deg
    std::array<int, 2> continuous_perturbation{-8, 8};  // ft/s added to W_20 of the gusts
    std::array<int, 2> shear_perturbation{-2, 2};       // ft/s added to W_20 of the shear
    std::array<int, 2> discrete_perturbation{-2, 2};    // ft/s added to V_m
    std::array<int, 2> noise_seed{0, 100000};
    bool random_phase = true;        // periodic airwake phase ~ U[0, 2 pi)
    bool random_deck_offset = true;  // deck-motion start time ~ U[0, deck_window)
    double deck_window = 1500.0;     // s
};

struct EpisodeConfig {
    double approach_speed = 225.0;  // V_t, ft/s
    double glideslope_deg = -3.5;
    std::optional<TrimCondition> trim;  // computed from approach_speed when empty
    bool deck_relative_trim = true;     // trim for the glideslope relative to the moving deck
    EnvironmentFlags flags = EnvironmentFlags::case1();
    TurbulenceLevel turbulence = TurbulenceLevel::low;
    double shear_w20_base = 0.0;    // ft/s before perturbation
    double ship_speed_kn = 15.0;
    double sea_wind_kn = 5.4;
    double ship_pitch = 0.018;      // theta_ac for the periodic airwake, rad
    double pitch_frequency = 0.62;  // rad/s
    double fixed_phase = 0.25 * kPi;  // used when the phase is not randomized
    DiscreteGustParams discrete;
    SteadyAirwakeTable steady = default_steady_airwake();
    RandomAirwakeTable random = default_random_airwake();
    std::shared_ptr<const DeckMotionModel> deck_model;  // null: calm deck
    DeckGeometry deck;
    Eigen::Vector3d hook_offset{-18.0, 0.0, 7.0};  // body axes from the CG, ft
    AircraftParams aircraft;
    ControlGains gains;
    SurfaceLimits limits;
    SuccessCriteria criteria;
    Randomization randomization;
    double time_cap = 20.0;     // s
    double time_to_go = 16.0;   // s, sets the initial range when initial_range is empty
    std::optional<double> initial_range;  // ft along the centerline from the hook to the target
    double dt = 0.005;
    std::uint64_t seed = 0;
    bool record_trajectory = false;
};

/// Quantities drawn once per episode.
struct RealizedInputs {
    std::uint64_t seed = 0;
    int wind_direction = 0;
    int continuous_delta = 0;
    int shear_delta = 0;
    int discrete_delta = 0;
    std::uint64_t noise_seed = 0;
    double phase = 0.0;         // rad
    double deck_offset = 0.0;   // s
};

inline RealizedInputs sample_initial_conditions(const EpisodeConfig& cfg, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    auto draw = [&](const std::array<int, 2>& r) { return std::uniform_int_distribution<int>(r[0], r[1])(rng); };
    const auto& R = cfg.randomization;
    RealizedInputs in;
    in.seed = seed;
    in.wind_direction = draw(R.wind_direction);
    in.continuous_delta = draw(R.continuous_perturbation);
    in.shear_delta = draw(R.shear_perturbation);
    in.discrete_delta = draw(R.discrete_perturbation);
    in.noise_seed = static_cast<std::uint64_t>(draw(R.noise_seed));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u_phase = unit(rng);
    const double u_deck = unit(rng);
    in.phase = R.random_phase ? 2.0 * kPi * u_phase : cfg.fixed_phase;
    in.deck_offset = R.random_deck_offset ? R.deck_window * u_deck : 0.0;
    return in;
}

/// Episode seed k of a campaign: a counter-based split of the campaign seed.
inline std::uint64_t episode_seed(std::uint64_t campaign_seed, std::uint64_t index) {
    return splitmix64(splitmix64(campaign_seed) + index);
}

/// Everything measured up to touchdown that the success criteria consult.
struct EpisodeMeasures {
    bool touched_down = false;
    bool crossed_ramp = false;
    double altitude_error = std::numeric_limits<double>::quiet_NaN();  // hook height over the ramp, ft
    double final_glideslope = std::numeric_limits<double>::quiet_NaN();  // deg, deck-relative
    double sink_rate = std::numeric_limits<double>::quiet_NaN();        // ft/s, descent averaged over the final window
    TouchdownRecord touchdown;
};

/// Single outcome. Order: ramp strike, altitude, glideslope, sink rate, then
/// deck geometry (out of deck, bolter), trap.
inline Outcome classify_episode(const EpisodeMeasures& m, double glideslope_deg, const SuccessCriteria& c) {
    if (m.crossed_ramp && m.altitude_error < 0.0) return Outcome::rampstrike;
    if (!m.touched_down) return Outcome::timeout;
    if (m.touchdown.outcome == TouchdownClass::rampstrike) return Outcome::rampstrike;
    if (!(m.altitude_error < c.max_altitude_error)) return Outcome::altitude_fail;
    if (!(std::abs(m.final_glideslope - glideslope_deg) < c.max_glideslope_error)) return Outcome::glideslope_fail;
    if (!(m.sink_rate < c.max_sink_rate)) return Outcome::sinkrate_fail;
    if (m.touchdown.outcome == TouchdownClass::out_of_deck) return Outcome::out_of_deck;
    if (m.touchdown.outcome == TouchdownClass::bolter) return Outcome::bolter;
    return Outcome::trap;
}

struct EpisodeResult {
    std::size_t index = 0;
    RealizedInputs inputs;
    Outcome outcome = Outcome::timeout;
    int wire = 0;
    EpisodeMeasures measures;
    double touchdown_time = std::numeric_limits<double>::quiet_NaN();
    Eigen::Vector3d mean_wind = Eigen::Vector3d::Zero();  // body axes, ft/s
    std::string error;  // diverged episodes
    std::vector<TrajectorySample> trajectory;

    bool success() const { return outcome == Outcome::trap; }
};

inline double initial_range(const EpisodeConfig& cfg) {
    if (cfg.initial_range) return *cfg.initial_range;
    const double closure = cfg.approach_speed * std::cos(deg2rad(cfg.glideslope_deg)) -
                           knots_to_fps(cfg.ship_speed_kn) * std::cos(deg2rad(cfg.deck.angled_deck_deg));
    return closure * cfg.time_to_go;
}

/// Air-relative flight-path angle (deg) that holds the glideslope relative to
/// the moving deck, given ship speed and the steady headwind.
inline double deck_relative_gamma(const EpisodeConfig& cfg) {
    const double V = cfg.approach_speed;
    const double tan_gs = std::tan(deg2rad(-cfg.glideslope_deg));
    const double headwind = cfg.flags.ambient ? knots_to_fps(cfg.sea_wind_kn) : 0.0;
    const double ship = knots_to_fps(cfg.ship_speed_kn) * std::cos(deg2rad(cfg.deck.angled_deck_deg));
    double g = deg2rad(cfg.glideslope_deg);
    for (int i = 0; i < 50; ++i) {
        const double closure = V * std::cos(g) - headwind - ship;
        g = -std::asin(std::clamp(closure * tan_gs / V, -1.0, 1.0));
    }
    return rad2deg(g);
}

/// Trim used for the initial state and the controller feed-forwards.
inline TrimCondition episode_trim(const EpisodeConfig& cfg) {
    if (cfg.trim) return *cfg.trim;
    const double gamma = cfg.deck_relative_trim ? deck_relative_gamma(cfg) : cfg.glideslope_deg;
    return solve_trim(cfg.approach_speed, gamma, cfg.aircraft);
}

namespace mission_detail {

struct HookKinematics {
    Eigen::Vector3d deck;      // hook position in the deck frame
    Eigen::Vector3d rel_vel;   // hook velocity relative to the target, deck axes
    double height = 0.0;       // above the target, world vertical
    double range = 0.0;        // to the target along the approach centerline
    double track = 0.0;        // right of the extended centerline, ground-fixed
};

inline HookKinematics hook_kinematics(const AircraftState& s, const Eigen::Vector3d& hook_offset,
                                      const DeckState& deck) {
    const Eigen::Matrix3d R = body_to_ned(s);
    const Eigen::Vector3d cg(s.x_n, s.y_e, -s.h);
    const Eigen::Vector3d hook = cg + R * hook_offset;
    const Eigen::Vector3d omega(s.p, s.q, s.r);
    const Eigen::Vector3d v_hook = R * (s.body_velocity() + omega.cross(hook_offset));
    HookKinematics k;
    k.deck = deck.to_deck(hook);
    k.rel_vel = deck.velocity_to_deck(v_hook - deck.target_velocity);
    k.height = deck.target.z() - hook.z();
    // Guidance uses the ground-fixed centerline through the moving target, so
    // ship yaw and roll do not swing the reference line at long range.
    k.range = deck.target.x() - hook.x();
    k.track = hook.y() - deck.target.y();
    return k;
}

}  // namespace mission_detail

/// Integrates one closed-loop approach. Dynamics errors end the episode as `diverged`.
inline EpisodeResult run_episode(const EpisodeConfig& cfg, const RealizedInputs& in) {
    EpisodeResult res;
    res.inputs = in;
    const TrimCondition trim = episode_trim(cfg);
    const double dt = cfg.dt;
    const AircraftParams& ac = cfg.aircraft;
    const DeckMotionModel calm;
    const DeckMotionModel& deck_model = cfg.deck_model ? *cfg.deck_model : calm;
    auto deck_at = [&](double t) { return deck_state_at(deck_model, t, cfg.ship_speed_kn, cfg.deck, in.deck_offset); };

    // Wind field.
    WindFieldSettings ws;
    ws.flags = cfg.flags;
    ws.airspeed = cfg.approach_speed;
    ws.span = ac.span;
    ws.dt = dt;
    const double range0 = initial_range(cfg);
    const double tan_gs = std::tan(deg2rad(-cfg.glideslope_deg));
    const double W20_gust = std::max(0.0, reference_wind_fps(cfg.turbulence) + in.continuous_delta);
    // Gust scales use the mean approach altitude above the sea.
    ws.dryden = DrydenParams::low_altitude(std::max(cfg.deck.deck_height + 0.5 * range0 * tan_gs, 10.0), W20_gust);
    ws.discrete = cfg.discrete;
    ws.discrete.amplitude_x += in.discrete_delta;
    ws.discrete.amplitude_z += in.discrete_delta;
    ws.shear.W_20 = cfg.shear_w20_base + in.shear_delta;
    ws.wind_direction_deg = in.wind_direction;
    ws.sea_wind = knots_to_fps(cfg.sea_wind_kn);
    ws.airwake.wind_over_deck = knots_to_fps(cfg.ship_speed_kn + cfg.sea_wind_kn);
    ws.airwake.ship_pitch = cfg.ship_pitch;
    ws.airwake.pitch_frequency = cfg.pitch_frequency;
    ws.airwake.phase = in.phase;
    ws.steady = cfg.steady;
    ws.random = cfg.random;
    ws.noise_seed = in.noise_seed;
    WindField wind(ws);

    // Initial state: hook on the glideslope, on the centerline, at trim.
    const DeckState deck0 = deck_at(0.0);
    const double psi0 = std::asin(std::clamp(
        knots_to_fps(cfg.ship_speed_kn) * std::sin(deg2rad(cfg.deck.angled_deck_deg)) / trim.airspeed, -1.0, 1.0));
    AircraftState s = trim_state(trim, psi0, 0.0);
    {
        const Eigen::Vector3d hook_ned = deck0.target + Eigen::Vector3d(-range0, 0.0, -range0 * tan_gs);
        const Eigen::Vector3d cg = hook_ned - body_to_ned(s) * cfg.hook_offset;
        s.x_n = cg.x();
        s.y_e = cg.y();
        s.h = -cg.z();
    }

    ControlTrim ct{trim.airspeed, deg2rad(trim.theta), trim.elevator, psi0};
    Autopilot ap(cfg.gains, ct, ac, cfg.limits);
    const ActuatorBank actuators(dt, cfg.limits);
    ActuatorState act;
    act.elevator.position = trim.elevator;

    const double cop = cfg.deck.cop_forward;
    double distance = 0.0;
    Eigen::Vector3d wind_sum = Eigen::Vector3d::Zero();
    long wind_count = 0;
    const std::size_t window = static_cast<std::size_t>(std::llround(cfg.criteria.glideslope_window / dt));
    std::deque<double> gamma_hist, sink_hist;

    EpisodeMeasures& m = res.measures;
    const long n_steps = static_cast<long>(std::ceil(cfg.time_cap / dt - 1e-9));
    bool wind_initialized = false;
    try {
        DeckState deck = deck0;
        auto hk = mission_detail::hook_kinematics(s, cfg.hook_offset, deck);
        for (long k = 0; k < n_steps; ++k) {
            const double t = static_cast<double>(k) * dt;
            const Eigen::Matrix3d R = body_to_ned(s);
            const double X_c = std::max(0.0, cop - hk.deck.x());
            const double V_now = s.speed();
            const WindSample ws_k =
                wind.sample(t, distance, std::max(s.h, ws.shear.z_0), X_c, std::max(V_now, 1.0), R.transpose());
            if (!wind_initialized) {
                // Start at trim airspeed relative to the local air mass.
                const Eigen::Vector3d v_air = s.body_velocity();
                s.u = v_air.x() + ws_k.body.x();
                s.v = v_air.y() + ws_k.body.y();
                s.w = v_air.z() + ws_k.body.z();
                wind_initialized = true;
            }
            BodyWind bw{ws_k.body, ws_k.q_g};
            wind_sum += ws_k.body;
            ++wind_count;

            const AirData ad = air_data(s, bw, ac.air_density);
            const Eigen::Vector3d v_air_ned = R * (s.body_velocity() - ws_k.body);
            const double gamma_air = std::atan2(-v_air_ned.z(), std::hypot(v_air_ned.x(), v_air_ned.y()));
            const CoeffSet coeffs = aero_coefficients(
                {ad.alpha, ad.beta}, coefficient_rates(s.p, s.q + bw.pitch_rate_gust, s.r, ad.airspeed, ac),
                act.positions(), ac.aero);
            const double drag = ad.qbar * ac.wing_area * coeffs.CD;

            ControlInputs ci;
            ci.theta = s.theta;
            ci.phi = s.phi;
            ci.psi = s.psi;
            ci.airspeed = ad.airspeed;
            ci.alpha = ad.alpha;
            ci.beta = ad.beta;
            ci.gamma = gamma_air;
            ci.drag = drag;
            ci.eps_h = hk.height - std::max(hk.range, 0.0) * tan_gs;
            ci.y_e = hk.track;
            const ControlCommand cmd = ap.update(ci, dt);
            const double thrust_lb = thrust(cmd.throttle, ac);

            if (cfg.record_trajectory) {
                TrajectorySample row;
                row.t = t;
                row.state = s;
                row.air = ad;
                row.gamma = flight_path_angle_deg(s);
                row.surfaces = act.positions();
                row.demands = cmd.saturated;
                row.throttle = cmd.throttle;
                row.wind = ws_k.body;
                row.pitch_rate_gust = ws_k.q_g;
                row.glideslope_error = ci.eps_h;
                row.lateral_error = ci.y_e;
                res.trajectory.push_back(row);
            }

            const SurfaceDeflections surfaces = act.positions();
            const AircraftState next = integrate_step(s, surfaces, thrust_lb, bw, ac, dt);
            act = actuators.step(act, cmd.saturated);
            distance += V_now * dt;

            const double t1 = t + dt;
            const DeckState deck1 = deck_at(t1);
            const auto hk1 = mission_detail::hook_kinematics(next, cfg.hook_offset, deck1);

            const double gamma_rel = rad2deg(std::atan2(-hk1.rel_vel.z(), hk1.rel_vel.x()));
            gamma_hist.push_back(gamma_rel);
            sink_hist.push_back((body_to_ned(next) * next.body_velocity()).z());
            if (gamma_hist.size() > window) {
                gamma_hist.pop_front();
                sink_hist.pop_front();
            }

            // Ramp crossing: hook clearance over the ramp edge.
            const double ramp = cfg.deck.ramp;
            if (!m.crossed_ramp && hk.deck.x() < ramp && hk1.deck.x() >= ramp) {
                const double f = (ramp - hk.deck.x()) / (hk1.deck.x() - hk.deck.x());
                m.crossed_ramp = true;
                m.altitude_error = -((1.0 - f) * hk.deck.z() + f * hk1.deck.z());
                if (m.altitude_error < 0.0) {
                    res.touchdown_time = t + f * dt;
                    m.touchdown = score_touchdown_point(ramp, (1.0 - f) * hk.deck.y() + f * hk1.deck.y(), cfg.deck);
                    m.touchdown.outcome = TouchdownClass::rampstrike;
                    s = next;
                    break;
                }
            }
            // Deck contact: hook height above the deck plane changes sign over the deck.
            if (hk.deck.z() < 0.0 && hk1.deck.z() >= 0.0 && hk1.deck.x() >= ramp) {
                const double f = -hk.deck.z() / (hk1.deck.z() - hk.deck.z());
                const Eigen::Vector3d p = (1.0 - f) * hk.deck + f * hk1.deck;
                m.touched_down = true;
                res.touchdown_time = t + f * dt;
                m.touchdown = score_touchdown_point(p.x(), p.y(), cfg.deck);
                // Final glideslope and sink rate share the averaging window.
                double g_sum = 0.0, s_sum = 0.0;
                for (double g : gamma_hist) g_sum += g;
                for (double v : sink_hist) s_sum += v;
                m.final_glideslope = g_sum / static_cast<double>(gamma_hist.size());
                m.sink_rate = s_sum / static_cast<double>(sink_hist.size());
                if (!m.crossed_ramp) {
                    m.crossed_ramp = true;
                    m.altitude_error = 0.0;
                }
                s = next;
                break;
            }
            s = next;
            deck = deck1;
            hk = hk1;
        }
        res.outcome = classify_episode(m, cfg.glideslope_deg, cfg.criteria);
    } catch (const Error& e) {
        res.outcome = Outcome::diverged;
        res.error = e.what();
    }
    if (wind_count > 0) res.mean_wind = wind_sum / static_cast<double>(wind_count);
    if (res.outcome == Outcome::trap) res.wire = m.touchdown.wire;
    return res;
}

inline EpisodeResult run_episode(const EpisodeConfig& cfg) {
    return run_episode(cfg, sample_initial_conditions(cfg, cfg.seed));
}

// --- campaigns ---------------------------------------------------------------

struct CampaignStats {
    std::size_t n_runs = 0;
    std::size_t n_success = 0;
    double success_rate = 0.0;
    double mu_x = 0.0, mu_y = 0.0;
    double sigma_x = 0.0, sigma_y = 0.0;  // sample standard deviation over traps
    std::array<std::size_t, kAllOutcomes.size()> counts{};
    std::array<std::size_t, 4> wire_counts{};
    std::vector<double> altitude_errors;  // per episode, NaN when the ramp was never reached

    std::size_t count(Outcome o) const { return counts[static_cast<std::size_t>(o)]; }
};

inline CampaignStats campaign_stats(const std::vector<EpisodeResult>& episodes) {
    CampaignStats st;
    st.n_runs = episodes.size();
    std::vector<double> xs, ys;
    for (const auto& e : episodes) {
        ++st.counts[static_cast<std::size_t>(e.outcome)];
        st.altitude_errors.push_back(e.measures.altitude_error);
        if (e.success()) {
            xs.push_back(e.measures.touchdown.x);
            ys.push_back(e.measures.touchdown.y);
            if (e.wire >= 1 && e.wire <= 4) ++st.wire_counts[static_cast<std::size_t>(e.wire - 1)];
        }
    }
    st.n_success = xs.size();
    st.success_rate = st.n_runs ? static_cast<double>(st.n_success) / static_cast<double>(st.n_runs) : 0.0;
    auto mean_sd = [](const std::vector<double>& v, double& mu, double& sd) {
        mu = sd = 0.0;
        if (v.empty()) return;
        for (double x : v) mu += x;
        mu /= static_cast<double>(v.size());
        if (v.size() < 2) return;
        for (double x : v) sd += (x - mu) * (x - mu);
        sd = std::sqrt(sd / static_cast<double>(v.size() - 1));
    };
    mean_sd(xs, st.mu_x, st.sigma_x);
    mean_sd(ys, st.mu_y, st.sigma_y);
    return st;
}

struct CampaignResult {
    std::vector<EpisodeResult> episodes;
    CampaignStats stats;
};

inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs n episodes with per-index seeds on `workers` threads (0 = hardware
/// concurrency). Results are ordered by episode index.
inline CampaignResult run_campaign(const EpisodeConfig& base, std::size_t n_runs, std::uint64_t seed,
                                   unsigned workers = 0) {
    if (n_runs < 1) throw RangeError("campaign needs at least one run");
    EpisodeConfig cfg = base;
    if (!cfg.trim) cfg.trim = episode_trim(cfg);
    CampaignResult out;
    out.episodes.resize(n_runs);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n_runs; i = next++) {
            EpisodeConfig c = cfg;
            c.seed = episode_seed(seed, i);
            EpisodeResult r = run_episode(c);
            r.index = i;
            out.episodes[i] = std::move(r);
        }
    };
    const unsigned n_threads = std::min<unsigned>(workers ? workers : default_workers(), static_cast<unsigned>(n_runs));
    if (n_threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned w = 0; w < n_threads; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    out.stats = campaign_stats(out.episodes);
    return out;
}

// --- output ------------------------------------------------------------------

inline const char* kEpisodeCsvHeader =
    "index,seed,outcome,wire,x,y,altitude_error,glideslope,sink_rate,touchdown_time,"
    "mean_wind_u,mean_wind_v,mean_wind_w,wind_direction,continuous_delta,shear_delta,discrete_delta,"
    "noise_seed,phase,deck_offset";

inline void write_episode_csv(std::ostream& os, const std::vector<EpisodeResult>& episodes) {
    os << kEpisodeCsvHeader << '\n';
    auto num = [&](double v) {
        if (std::isfinite(v)) os << std::fixed << std::setprecision(6) << v;
        else os << "nan";
    };
    for (const auto& e : episodes) {
        const auto& m = e.measures;
        const bool td = m.touched_down || e.outcome == Outcome::rampstrike;
        os << e.index << ',' << e.inputs.seed << ',' << outcome_name(e.outcome) << ',' << e.wire << ',';
        num(td ? m.touchdown.x : std::nan(""));
        os << ',';
        num(td ? m.touchdown.y : std::nan(""));
        os << ',';
        num(m.altitude_error);
        os << ',';
        num(m.final_glideslope);
        os << ',';
        num(m.sink_rate);
        os << ',';
        num(e.touchdown_time);
        os << ',';
        num(e.mean_wind.x());
        os << ',';
        num(e.mean_wind.y());
        os << ',';
        num(e.mean_wind.z());
        os << ',' << e.inputs.wind_direction << ',' << e.inputs.continuous_delta << ',' << e.inputs.shear_delta << ','
           << e.inputs.discrete_delta << ',' << e.inputs.noise_seed << ',';
        num(e.inputs.phase);
        os << ',';
        num(e.inputs.deck_offset);
        os << '\n';
    }
}

inline const char* kSweepCsvHeader =
    "speed,n_runs,success_rate,mu_x,mu_y,sigma_x,sigma_y,trap,bolter,rampstrike,altitude_fail,glideslope_fail,"
    "sinkrate_fail,timeout,out_of_deck,diverged";

inline void write_sweep_row(std::ostream& os, double speed, const CampaignStats& st) {
    os << std::fixed << std::setprecision(6) << speed << ',' << st.n_runs << ',' << st.success_rate << ',' << st.mu_x
       << ',' << st.mu_y << ',' << st.sigma_x << ',' << st.sigma_y;
    for (Outcome o : kAllOutcomes) os << ',' << st.count(o);
    os << '\n';
}

}  // namespace acl
