#pragma once

/**
 * Atmospheric and carrier-airwake disturbances.
 *
 * Gust, discrete-gust and free-air components are body-aligned; shear and the
 * steady, periodic and random airwake components are expressed in the approach
 * frame (x along the landing centerline toward the bow, z down) and rotated
 * into body axes by compose_wind. All velocities are wind velocities in ft/s.
 */

#include "acl/common.hpp"
#include "acl/lti.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace acl {

// --- noise -------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

enum class NoiseChannel : std::uint64_t {
    dryden_u = 1,
    dryden_w,
    free_air_u,
    free_air_v,
    free_air_w,
    wake_x,
    wake_z,
};

/// Independent, reproducible standard-normal stream for one channel.
class NoiseStream {
public:
    NoiseStream(std::uint64_t seed, NoiseChannel channel)
        : seed_(seed), engine_(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(channel)))) {}

    double gaussian() { return normal_(engine_); }
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Band-limited white noise: unit-intensity white noise held over each step.
inline double band_limited_sample(NoiseStream& noise, double dt) { return noise.gaussian() / std::sqrt(dt); }

// --- lookup tables -----------------------------------------------------------

/// Piecewise-linear table over increasing breakpoints, clamped outside.
class LookupTable {
public:
    LookupTable() = default;
    LookupTable(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
        if (x_.empty() || x_.size() != y_.size()) throw FormatError("lookup table needs matching, non-empty columns");
        for (std::size_t i = 1; i < x_.size(); ++i)
            if (!(x_[i] > x_[i - 1])) throw FormatError("lookup table breakpoints must increase strictly");
    }

    static LookupTable constant(double value) { return LookupTable({0.0}, {value}); }

    double operator()(double x) const {
        if (x <= x_.front()) return y_.front();
        if (x >= x_.back()) return y_.back();
        const auto it = std::upper_bound(x_.begin(), x_.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - x_.begin());
        const double t = (x - x_[i - 1]) / (x_[i] - x_[i - 1]);
        return y_[i - 1] + t * (y_[i] - y_[i - 1]);
    }

    const std::vector<double>& breakpoints() const { return x_; }
    const std::vector<double>& values() const { return y_; }

private:
    std::vector<double> x_, y_;
};

/// Reads a two-column "X_c value" table; '#' starts a comment.
inline LookupTable read_table(std::istream& in, const std::string& name = "table") {
    std::vector<double> x, y;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double a, b;
        if (!(ls >> a)) continue;
        if (!(ls >> b)) throw FormatError(name + ":" + std::to_string(lineno) + ": expected two columns");
        if (!std::isfinite(a) || !std::isfinite(b)) throw NonFinite(name + ":" + std::to_string(lineno) + ": non-finite value");
        x.push_back(a);
        y.push_back(b);
    }
    return LookupTable(std::move(x), std::move(y));
}

inline LookupTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open table " + path);
    return read_table(in, path);
}

// --- Dryden continuous gusts -------------------------------------------------

struct DrydenParams {
    double L_u = 0.0;      // ft
    double L_w = 100.0;    // ft
    double sigma_u = 0.0;  // ft/s
    double sigma_w = 0.0;  // ft/s
    double W_20 = 0.0;     // ft/s
    double h = 0.0;        // ft

    /// Low-altitude scales and intensities for altitude h and 20-ft wind W_20.
    static DrydenParams low_altitude(double h, double W_20) {
        DrydenParams p;
        p.h = h;
        p.W_20 = W_20;
        const double base = 0.177 + 0.000823 * h;
        p.L_w = 100.0;
        p.L_u = h / std::pow(base, 1.2);
        p.sigma_w = 0.1 * W_20;
        p.sigma_u = p.sigma_w / std::pow(base, 0.4);
        return p;
    }
};

/// Two-sided spatial PSDs, per rad/ft; each integrates to sigma^2 over the whole line.
inline double dryden_psd_u(double Omega, const DrydenParams& p) {
    const double x = p.L_u * Omega;
    return p.sigma_u * p.sigma_u * p.L_u / kPi / (1.0 + x * x);
}

/// The usual L_w/pi prefactor is the one-sided form; halved here to match dryden_psd_u.
inline double dryden_psd_w(double Omega, const DrydenParams& p) {
    const double x = p.L_w * Omega;
    return p.sigma_w * p.sigma_w * p.L_w / (2.0 * kPi) * (1.0 + 3.0 * x * x) / ((1.0 + x * x) * (1.0 + x * x));
}

struct GustSample {
    double u = 0.0, w = 0.0;  // ft/s
    double q = 0.0;           // rad/s
};

/// Forming filters for u_g, w_g and the rotary q_g, driven by band-limited noise.
class DrydenGenerator {
public:
    DrydenGenerator(const DrydenParams& params, double airspeed, double span, double dt, std::uint64_t seed)
        : params_(params), dt_(dt), noise_u_(seed, NoiseChannel::dryden_u), noise_w_(seed, NoiseChannel::dryden_w) {
        if (!(airspeed > 0.0)) throw std::invalid_argument("Dryden filters need positive airspeed");
        const double V = airspeed;
        const double Tu = params.L_u / V;
        const double Tw = params.L_w / V;
        const double Tq = 4.0 * span / (kPi * V);
        const double fastest = std::max({1.0 / Tu, 1.0 / Tw, 1.0 / Tq});
        if (fastest * dt >= 0.5) throw std::invalid_argument("step too large for the Dryden filter poles");

        // u_g: sigma_u sqrt(2 L_u / V) / (T_u s + 1) on unit-intensity noise.
        StateSpace su{Eigen::MatrixXd::Constant(1, 1, -1.0 / Tu), Eigen::VectorXd::Constant(1, 1.0),
                      Eigen::RowVectorXd::Constant(1, params.sigma_u * std::sqrt(2.0 / Tu))};
        u_filter_ = DiscreteStateSpace(su, dt);

        // w_g: (1 + sqrt3 T_w s)/(T_w s + 1)^2, normalized to sigma_w; q_g = (s/V)/(T_q s + 1) w_g.
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(3, 3);
        A(0, 1) = 1.0;
        A(1, 0) = -1.0 / (Tw * Tw);
        A(1, 1) = -2.0 / Tw;
        Eigen::RowVectorXd Cw = Eigen::RowVectorXd::Zero(3);
        Cw(0) = 1.0 / (Tw * Tw);
        Cw(1) = std::sqrt(3.0) / Tw;
        StateSpace shape{A.topLeftCorner(2, 2), Eigen::Vector2d(0.0, 1.0), Cw.head(2)};
        const double gain = params.sigma_w > 0.0 ? params.sigma_w / std::sqrt(stationary_variance(shape)) : 0.0;
        Cw *= gain;
        // Third state lags w_g with time constant T_q.
        A.row(2) = Cw / Tq;
        A(2, 2) = -1.0 / Tq;
        w_row_ = Cw;
        q_row_ = (Cw - Eigen::RowVectorXd::Unit(3, 2)) / (V * Tq);
        Eigen::VectorXd B = Eigen::VectorXd::Zero(3);
        B(1) = 1.0;
        w_filter_ = DiscreteStateSpace(StateSpace{A, B, w_row_}, dt);
    }

    GustSample step() {
        GustSample g;
        g.u = u_filter_.step(band_limited_sample(noise_u_, dt_));
        w_filter_.step(band_limited_sample(noise_w_, dt_));
        const Eigen::VectorXd& x = w_filter_.state();
        g.w = w_row_.dot(x);
        g.q = q_row_.dot(x);
        return g;
    }

    const DrydenParams& params() const { return params_; }

private:
    DrydenParams params_;
    double dt_;
    NoiseStream noise_u_, noise_w_;
    DiscreteStateSpace u_filter_, w_filter_;
    Eigen::RowVectorXd w_row_, q_row_;
};

/// Convenience: n consecutive Dryden samples.
inline std::vector<GustSample> dryden_series(const DrydenParams& params, double airspeed, double span, double dt,
                                             std::size_t n, std::uint64_t seed) {
    DrydenGenerator gen(params, airspeed, span, dt, seed);
    std::vector<GustSample> out(n);
    for (auto& s : out) s = gen.step();
    return out;
}

// --- discrete gust -----------------------------------------------------------

struct DiscreteGustParams {
    double amplitude_x = 3.5;  // V_m, ft/s
    double amplitude_z = 3.0;
    double length_x = 250.0;   // d_m, ft
    double length_z = 250.0;
};

struct DiscreteGust {
    double u = 0.0, w = 0.0;
};

/// Three-branch 1-cosine profile: zero before the gust, half-cosine rise up to
/// V_m at x = d_m, zero again past d_m.
inline double one_minus_cosine(double x, double amplitude, double length) {
    if (x < 0.0 || x > length) return 0.0;
    return 0.5 * amplitude * (1.0 - std::cos(kPi * x / length));
}

inline DiscreteGust discrete_gust(double distance, const DiscreteGustParams& p) {
    return {one_minus_cosine(distance, p.amplitude_x, p.length_x),
            one_minus_cosine(distance, p.amplitude_z, p.length_z)};
}

// --- wind shear --------------------------------------------------------------

struct ShearParams {
    double W_20 = 0.0;  // ft/s at 20 ft
    double z_0 = 0.15;  // ft, terminal flight phase
};

/// Logarithmic mean-wind magnitude at altitude h.
inline double wind_shear(double h, const ShearParams& p) {
    if (h < p.z_0) {
        std::ostringstream os;
        os << "altitude " << h << " ft below surface roughness " << p.z_0 << " ft";
        throw AltitudeBelowRoughness(os.str());
    }
    return p.W_20 * std::log(h / p.z_0) / std::log(20.0 / p.z_0);
}

/// Horizontal wind vector for a wind blowing from `direction_deg` relative to
/// the approach course (0 = headwind, 90 = from the right).
inline Eigen::Vector3d shear_vector(double magnitude, double direction_deg) {
    const double d = deg2rad(direction_deg);
    return {-magnitude * std::cos(d), -magnitude * std::sin(d), 0.0};
}

// --- carrier airwake ---------------------------------------------------------

struct AirwakeParams {
    double wind_over_deck = 0.0;   // V_wod, ft/s
    double ship_pitch = 0.018;     // theta_ac, rad
    double pitch_frequency = 0.62; // omega_p, rad/s
    double phase = 0.0;            // P, rad
    double cutoff_axial = 2236.0;  // ft
    double cutoff_vertical = 2536.0;
};

struct AirwakeSample {
    double U = 0.0;  // along the approach axis, ft/s
    double W = 0.0;  // down, ft/s
};

/// Ship-motion-induced periodic disturbance at range X_c astern of the
/// centre of pitch, for aircraft airspeed V.
inline AirwakeSample periodic_airwake(double t, double X_c, double airspeed, const AirwakeParams& p) {
    const double Vwd = p.wind_over_deck;
    if (Vwd <= 0.0 || p.ship_pitch == 0.0) return {};
    const double X = std::max(X_c, 0.0);
    const double k = 0.85 * Vwd;
    const double C = std::cos(p.pitch_frequency * (t * (1.0 - (airspeed - Vwd) / k) + X / k) + p.phase);
    AirwakeSample s;
    if (X <= p.cutoff_axial) s.U = p.ship_pitch * Vwd * (2.22 + 0.0009 * X) * C;
    if (X <= p.cutoff_vertical) s.W = p.ship_pitch * Vwd * (4.98 + 0.0018 * X) * C;
    return s;
}

/// Steady burble tables give U_s/V_wod and W_s/V_wod against X_c.
struct SteadyAirwakeTable {
    LookupTable axial_ratio;
    LookupTable vertical_ratio;
};

/// Approximate steady burble profile: ratios fade to zero far astern and dip
/// near the ramp. Not authoritative; replace with measured data when available.
inline SteadyAirwakeTable default_steady_airwake() {
    return {LookupTable({0.0, 150.0, 300.0, 500.0, 800.0, 1200.0, 2000.0},
                        {0.02, 0.06, 0.08, 0.06, 0.03, 0.01, 0.0}),
            LookupTable({0.0, 150.0, 300.0, 500.0, 800.0, 1200.0, 2000.0},
                        {0.03, 0.06, 0.05, 0.01, -0.02, -0.01, 0.0})};
}

inline AirwakeSample steady_airwake(double X_c, double wind_over_deck, const SteadyAirwakeTable& table) {
    return {table.axial_ratio(X_c) * wind_over_deck, table.vertical_ratio(X_c) * wind_over_deck};
}

/// sigma(X_c)/V_wod and tau(X_c) tables for the random airwake.
struct RandomAirwakeTable {
    LookupTable sigma_ratio;  // sigma / V_wod
    LookupTable tau;          // s
};

/// Placeholder tables: sigma = 0.3 V_wod / sqrt(100), tau = 2 s at every range.
inline RandomAirwakeTable default_random_airwake() {
    return {LookupTable::constant(0.3 / std::sqrt(100.0)), LookupTable::constant(2.0)};
}

/// First-order lag of unit DC gain applied to a held input, exact for constant tau.
inline double first_order_step(double state, double input, double tau, double dt) {
    const double a = std::exp(-dt / tau);
    return a * state + (1.0 - a) * input;
}

struct FreeAirSample {
    double u = 0.0, v = 0.0, w = 0.0;
};

/// Free-air turbulence filters for approach airspeed V_t.
class FreeAirTurbulence {
public:
    FreeAirTurbulence(double V_t, double dt, std::uint64_t seed)
        : dt_(dt),
          noise_u_(seed, NoiseChannel::free_air_u),
          noise_v_(seed, NoiseChannel::free_air_v),
          noise_w_(seed, NoiseChannel::free_air_w) {
        if (!(V_t > 0.0)) throw std::invalid_argument("free-air turbulence needs positive airspeed");
        u_ = DiscreteStateSpace(u_system(V_t), dt);
        v_ = DiscreteStateSpace(v_system(V_t), dt);
        w_ = DiscreteStateSpace(w_system(V_t), dt);
    }

    static StateSpace first_order(double gain, double tau) {
        return {Eigen::MatrixXd::Constant(1, 1, -1.0 / tau), Eigen::VectorXd::Constant(1, 1.0),
                Eigen::RowVectorXd::Constant(1, gain / tau)};
    }
    static StateSpace u_system(double V) { return first_order(std::sqrt(200.0 / V), 100.0 / V); }
    static StateSpace w_system(double V) { return first_order(std::sqrt(71.6 / V), 100.0 / V); }
    /// K (1 + a s) / ((1 + b s)(1 + c s)) with a = 400/V, b = 1000/V, c = 400/(3V).
    static StateSpace v_system(double V) {
        const double K = std::sqrt(5900.0 / V);
        const double a = 400.0 / V, b = 1000.0 / V, c = 400.0 / (3.0 * V);
        Eigen::Matrix2d A;
        A << 0.0, 1.0, -1.0 / (b * c), -(b + c) / (b * c);
        Eigen::RowVector2d C(K / (b * c), K * a / (b * c));
        return {A, Eigen::Vector2d(0.0, 1.0), C};
    }

    /// Steps with explicit filter inputs (used for deterministic checks).
    FreeAirSample step(double eta_u, double eta_v, double eta_w) {
        return {u_.step(eta_u), v_.step(eta_v), w_.step(eta_w)};
    }

    FreeAirSample step() {
        return step(band_limited_sample(noise_u_, dt_), band_limited_sample(noise_v_, dt_),
                    band_limited_sample(noise_w_, dt_));
    }

private:
    double dt_;
    NoiseStream noise_u_, noise_v_, noise_w_;
    DiscreteStateSpace u_, v_, w_;
};

/// Random ship-wake turbulence. The driving noise is white noise through the
/// high-pass s/(s + 0.1), modulated by sin(10 pi t).
class RandomAirwake {
public:
    static constexpr double kVerticalTau = 3.33;
    static constexpr double kHighPassCorner = 0.1;  // rad/s

    RandomAirwake(double wind_over_deck, RandomAirwakeTable table, double dt, std::uint64_t seed)
        : wod_(wind_over_deck),
          table_(std::move(table)),
          dt_(dt),
          noise_x_(seed, NoiseChannel::wake_x),
          noise_z_(seed, NoiseChannel::wake_z) {}

    /// Vertical filter gain 0.035 V_wod sqrt(6.66).
    static double vertical_gain(double wind_over_deck) { return 0.035 * wind_over_deck * std::sqrt(6.66); }

    /// Steps with explicit noise inputs (before high-pass and modulation).
    AirwakeSample step(double t, double X_c, double eta_x, double eta_z) {
        const double hx = high_pass(eta_x, low_x_);
        const double hz = high_pass(eta_z, low_z_);
        const double mod = std::sin(10.0 * kPi * t);
        const double sigma = table_.sigma_ratio(X_c) * wod_;
        const double tau = table_.tau(X_c);
        ux_ = first_order_step(ux_, sigma * std::sqrt(2.0 * tau) * hx * mod, tau, dt_);
        uz_ = first_order_step(uz_, vertical_gain(wod_) * hz * mod, kVerticalTau, dt_);
        return {ux_, uz_};
    }

    AirwakeSample step(double t, double X_c) {
        return step(t, X_c, band_limited_sample(noise_x_, dt_), band_limited_sample(noise_z_, dt_));
    }

private:
    double high_pass(double eta, double& low) {
        low = first_order_step(low, eta, 1.0 / kHighPassCorner, dt_);
        return eta - low;
    }

    double wod_;
    RandomAirwakeTable table_;
    double dt_;
    NoiseStream noise_x_, noise_z_;
    double low_x_ = 0.0, low_z_ = 0.0;
    double ux_ = 0.0, uz_ = 0.0;
};

// --- composition -------------------------------------------------------------

struct EnvironmentFlags {
    bool continuous = true;  // Dryden gusts
    bool discrete = true;
    bool shear = true;
    bool periodic = true;
    bool steady = true;
    bool free_air = true;
    bool random_wake = true;
    bool ambient = true;     // steady sea wind blowing down the deck

    /// Continuous and discrete gusts, shear and all airwake components.
    static EnvironmentFlags case1() { return {}; }
    /// Case I without shear and discrete gusts.
    static EnvironmentFlags case2() {
        EnvironmentFlags f;
        f.shear = false;
        f.discrete = false;
        return f;
    }
    /// Case I without any airwake component.
    static EnvironmentFlags case3() {
        EnvironmentFlags f;
        f.periodic = f.steady = f.free_air = f.random_wake = false;
        return f;
    }
    static EnvironmentFlags none() { return {false, false, false, false, false, false, false, false}; }

    bool operator==(const EnvironmentFlags&) const = default;
};

enum class WindComponent : std::size_t {
    continuous, discrete, shear, periodic, steady, free_air, random_wake, ambient, count
};

inline const char* component_name(WindComponent c) {
    static const char* names[] = {"continuous", "discrete", "shear",       "periodic",
                                  "steady",     "free_air", "random_wake", "ambient"};
    return names[static_cast<std::size_t>(c)];
}

inline constexpr std::size_t kWindComponentCount = static_cast<std::size_t>(WindComponent::count);

/// Raw component values for one instant, before frame resolution.
struct WindComponents {
    // body axes
    Eigen::Vector3d continuous = Eigen::Vector3d::Zero();
    double rotary = 0.0;  // q_g, rad/s
    Eigen::Vector3d discrete = Eigen::Vector3d::Zero();
    Eigen::Vector3d free_air = Eigen::Vector3d::Zero();
    // approach frame
    Eigen::Vector3d shear = Eigen::Vector3d::Zero();
    Eigen::Vector3d periodic = Eigen::Vector3d::Zero();
    Eigen::Vector3d steady = Eigen::Vector3d::Zero();
    Eigen::Vector3d random_wake = Eigen::Vector3d::Zero();
    Eigen::Vector3d ambient = Eigen::Vector3d::Zero();
};

struct WindSample {
    Eigen::Vector3d body = Eigen::Vector3d::Zero();  // total (u_w, v_w, w_w)
    double q_g = 0.0;
    std::array<Eigen::Vector3d, kWindComponentCount> components{};

    const Eigen::Vector3d& component(WindComponent c) const { return components[static_cast<std::size_t>(c)]; }
};

/// Rotates frame-fixed components into body axes (`ned_to_body` = R_bn) and
/// sums the enabled ones, keeping the per-component breakdown.
inline WindSample compose_wind(const WindComponents& c, const EnvironmentFlags& flags,
                               const Eigen::Matrix3d& ned_to_body) {
    WindSample s;
    for (auto& v : s.components) v.setZero();
    auto put = [&](WindComponent which, bool on, const Eigen::Vector3d& body) {
        if (on) s.components[static_cast<std::size_t>(which)] = body;
    };
    put(WindComponent::continuous, flags.continuous, c.continuous);
    put(WindComponent::discrete, flags.discrete, c.discrete);
    put(WindComponent::free_air, flags.free_air, c.free_air);
    put(WindComponent::shear, flags.shear, ned_to_body * c.shear);
    put(WindComponent::periodic, flags.periodic, ned_to_body * c.periodic);
    put(WindComponent::steady, flags.steady, ned_to_body * c.steady);
    put(WindComponent::random_wake, flags.random_wake, ned_to_body * c.random_wake);
    put(WindComponent::ambient, flags.ambient, ned_to_body * c.ambient);
    for (const auto& v : s.components) s.body += v;
    s.q_g = flags.continuous ? c.rotary : 0.0;
    return s;
}

enum class TurbulenceLevel { low, moderate, high };

/// 20-ft reference wind for the turbulence level: 15, 30, 45 kn.
inline double reference_wind_fps(TurbulenceLevel level) {
    switch (level) {
        case TurbulenceLevel::low: return knots_to_fps(15.0);
        case TurbulenceLevel::moderate: return knots_to_fps(30.0);
        case TurbulenceLevel::high: return knots_to_fps(45.0);
    }
    return knots_to_fps(15.0);
}

/// Per-episode settings of the wind field.
struct WindFieldSettings {
    EnvironmentFlags flags;
    double airspeed = 225.0;          // V_t, ft/s
    double span = 37.42;              // ft
    double dt = 0.005;
    DrydenParams dryden;
    DiscreteGustParams discrete;
    ShearParams shear;
    double wind_direction_deg = 0.0;
    double sea_wind = 0.0;            // ft/s, headwind along the approach axis
    AirwakeParams airwake;
    SteadyAirwakeTable steady = default_steady_airwake();
    RandomAirwakeTable random = default_random_airwake();
    std::uint64_t noise_seed = 0;
};

/// Stateful per-episode wind generator. Call sample() once per step, in order.
class WindField {
public:
    explicit WindField(const WindFieldSettings& s)
        : s_(s),
          dryden_(s.dryden, s.airspeed, s.span, s.dt, s.noise_seed),
          free_air_(s.airspeed, s.dt, s.noise_seed),
          wake_(s.airwake.wind_over_deck, s.random, s.dt, s.noise_seed) {}

    /// t: episode time; distance: path length flown; altitude: ft above sea;
    /// X_c: range astern of the centre of pitch; airspeed: current V.
    WindSample sample(double t, double distance, double altitude, double X_c, double airspeed,
                      const Eigen::Matrix3d& ned_to_body) {
        WindComponents c;
        // Generators advance every step regardless of flags so streams stay aligned.
        const GustSample g = dryden_.step();
        c.continuous = {g.u, 0.0, g.w};
        c.rotary = g.q;
        const DiscreteGust d = discrete_gust(distance, s_.discrete);
        c.discrete = {d.u, 0.0, d.w};
        const FreeAirSample f = free_air_.step();
        c.free_air = {f.u, f.v, f.w};
        if (s_.flags.shear) c.shear = shear_vector(wind_shear(std::max(altitude, s_.shear.z_0), s_.shear), s_.wind_direction_deg);
        const AirwakeSample p = periodic_airwake(t, X_c, airspeed, s_.airwake);
        c.periodic = {p.U, 0.0, p.W};
        const AirwakeSample st = steady_airwake(X_c, s_.airwake.wind_over_deck, s_.steady);
        c.steady = {st.U, 0.0, st.W};
        const AirwakeSample r = wake_.step(t, X_c);
        c.random_wake = {r.U, 0.0, r.W};
        c.ambient = {-s_.sea_wind, 0.0, 0.0};
        return compose_wind(c, s_.flags, ned_to_body);
    }

    const WindFieldSettings& settings() const { return s_; }

private:
    WindFieldSettings s_;
    DrydenGenerator dryden_;
    FreeAirTurbulence free_air_;
    RandomAirwake wake_;
};

}  // namespace acl
