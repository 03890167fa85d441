#pragma once

/**
 * Deck-motion series I/O, a synthetic sea-state generator, sum-of-sinusoids
 * fitting, deck kinematics and touchdown scoring.
 *
 * Deck frame: origin at the touchdown target (wire 3), x along the landing
 * centerline toward the bow, y to starboard, z down, rigidly attached to the ship.
 * Oscillatory translations are ship-axis surge, sway and heave (heave positive up).
 */

#include "acl/common.hpp"
#include "acl/environment.hpp"
#include "acl/flight_dynamics.hpp"

#include <Eigen/Dense>
#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace acl {

// --- series ------------------------------------------------------------------

inline constexpr std::size_t kDeckDof = 6;
inline constexpr std::size_t kDeckChannels = 12;
inline constexpr double kDeckSampleRate = 20.0;  // Hz
inline constexpr double kSamplingJitter = 1e-6;  // s

inline const std::array<std::string, kDeckChannels>& deck_channel_names() {
    static const std::array<std::string, kDeckChannels> names{
        "surge", "sway", "heave", "roll", "pitch", "yaw",
        "surge_rate", "sway_rate", "heave_rate", "roll_rate", "pitch_rate", "yaw_rate"};
    return names;
}

enum class SeaLevel { low, medium, high };
enum class SeaDominance { heave, roll };

struct SeaState {
    SeaLevel level = SeaLevel::low;
    SeaDominance dominance = SeaDominance::heave;

    std::string label() const {
        static const char* levels[] = {"low", "medium", "high"};
        return std::string(levels[static_cast<int>(level)]) + (dominance == SeaDominance::heave ? "-heave" : "-roll");
    }
    bool operator==(const SeaState&) const = default;
};

inline SeaState parse_sea_state(const std::string& label) {
    const auto dash = label.find('-');
    const std::string lvl = label.substr(0, dash);
    const std::string dom = dash == std::string::npos ? "heave" : label.substr(dash + 1);
    SeaState s;
    if (lvl == "low") s.level = SeaLevel::low;
    else if (lvl == "medium") s.level = SeaLevel::medium;
    else if (lvl == "high") s.level = SeaLevel::high;
    else throw RangeError("unknown sea-state level '" + lvl + "'");
    if (dom == "heave") s.dominance = SeaDominance::heave;
    else if (dom == "roll") s.dominance = SeaDominance::roll;
    else throw RangeError("unknown sea-state dominance '" + dom + "'");
    return s;
}

/// Positions in ft and rad, rates in ft/s and rad/s.
struct DeckMotionSeries {
    double sample_rate = kDeckSampleRate;
    std::vector<double> time;
    std::array<std::vector<double>, kDeckChannels> channels;
    std::string sea_state = "unknown";

    std::size_t size() const { return time.size(); }
    double duration() const { return time.size() < 2 ? 0.0 : time.back() - time.front() + 1.0 / sample_rate; }
};

inline void write_deck_series(std::ostream& os, const DeckMotionSeries& s) {
    os << "# sea_state=" << s.sea_state << "\n";
    os << "time";
    for (const auto& n : deck_channel_names()) os << ',' << n;
    os << '\n';
    os << std::setprecision(17);
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << s.time[i];
        for (const auto& c : s.channels) os << ',' << c[i];
        os << '\n';
    }
}

inline void save_deck_series(const std::string& path, const DeckMotionSeries& s) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write deck series " + path);
    write_deck_series(out, s);
}

namespace deck_detail {

/// Keeps empty trailing cells; double-quoted cells may hold commas and "" escapes.
inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    bool quoted = false;
    auto flush = [&] {
        cell.erase(0, cell.find_first_not_of(" \t\r"));
        cell.erase(cell.find_last_not_of(" \t\r") + 1);
        out.push_back(cell);
        cell.clear();
    };
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            flush();
        } else {
            cell += c;
        }
    }
    flush();
    return out;
}

}  // namespace deck_detail

/// Parses the deck-motion CSV: optional '# sea_state=' comment, a header with
/// `time` and all twelve channels (any order, extra columns ignored), then rows.
inline DeckMotionSeries read_deck_series(std::istream& in, const std::string& name = "deck series") {
    DeckMotionSeries s;
    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        if (line[0] == '#') {
            const auto pos = line.find("sea_state=");
            if (pos != std::string::npos) {
                s.sea_state = line.substr(pos + 10);
                s.sea_state.erase(s.sea_state.find_last_not_of(" \t\r") + 1);
            }
            continue;
        }
        header = deck_detail::split_csv(line);
        break;
    }
    if (header.empty()) throw FormatError(name + ": missing header row");
    auto column = [&](const std::string& key) -> std::size_t {
        const auto it = std::find(header.begin(), header.end(), key);
        if (it == header.end()) throw FormatError(name + ": missing channel '" + key + "'");
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t tcol = column("time");
    std::array<std::size_t, kDeckChannels> cols{};
    for (std::size_t k = 0; k < kDeckChannels; ++k) cols[k] = column(deck_channel_names()[k]);

    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r" || line[0] == '#') continue;
        const auto cells = deck_detail::split_csv(line);
        if (cells.size() != header.size())
            throw FormatError(name + ":" + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                              " columns, got " + std::to_string(cells.size()));
        auto number = [&](std::size_t c) {
            double v;
            try {
                std::size_t used = 0;
                v = std::stod(cells[c], &used);
                if (used != cells[c].size()) throw std::invalid_argument("trailing");
            } catch (const std::out_of_range&) {
                throw NonFinite(name + ":" + std::to_string(lineno) + ": value out of range in " + header[c]);
            } catch (const std::exception&) {
                throw FormatError(name + ":" + std::to_string(lineno) + ": bad number '" + cells[c] + "' in " +
                                  header[c]);
            }
            if (!std::isfinite(v))
                throw NonFinite(name + ":" + std::to_string(lineno) + ": non-finite value in " + header[c]);
            return v;
        };
        s.time.push_back(number(tcol));
        for (std::size_t k = 0; k < kDeckChannels; ++k) s.channels[k].push_back(number(cols[k]));
    }
    if (s.time.size() < 2) throw FormatError(name + ": need at least two samples");
    const double dt = 1.0 / kDeckSampleRate;
    for (std::size_t i = 1; i < s.time.size(); ++i) {
        const double step = s.time[i] - s.time[i - 1];
        if (std::abs(step - dt) > kSamplingJitter) {
            std::ostringstream os;
            os << name << ": sample " << i << " spacing " << step << " s differs from " << dt << " s";
            throw NonUniformSampling(os.str());
        }
    }
    s.sample_rate = kDeckSampleRate;
    return s;
}

inline DeckMotionSeries load_deck_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open deck series " + path);
    return read_deck_series(in, path);
}

// --- sum-of-sinusoids model --------------------------------------------------

/// A sin(omega t + phase).
struct SinusoidTerm {
    double amplitude = 0.0;
    double omega = 0.0;  // rad/s
    double phase = 0.0;  // rad
};

struct ChannelModel {
    double offset = 0.0;
    std::vector<SinusoidTerm> terms;
    double rms_residual = 0.0;  // of the fit against its series
    double rms_signal = 0.0;    // about the mean

    double value(double t) const {
        double y = offset;
        for (const auto& k : terms) y += k.amplitude * std::sin(k.omega * t + k.phase);
        return y;
    }
    double derivative(double t) const {
        double y = 0.0;
        for (const auto& k : terms) y += k.amplitude * k.omega * std::cos(k.omega * t + k.phase);
        return y;
    }
};

/// Six displacement channels; rates are their analytic derivatives.
struct DeckMotionModel {
    std::array<ChannelModel, kDeckDof> channels;

    double position(std::size_t dof, double t) const { return channels[dof].value(t); }
    double rate(std::size_t dof, double t) const { return channels[dof].derivative(t); }

    /// Samples the model at 20 Hz into a series.
    DeckMotionSeries sample(double duration, const std::string& label = "model") const {
        DeckMotionSeries s;
        s.sea_state = label;
        const std::size_t n = static_cast<std::size_t>(std::llround(duration * kDeckSampleRate));
        s.time.resize(n);
        for (auto& c : s.channels) c.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / kDeckSampleRate;
            s.time[i] = t;
            for (std::size_t d = 0; d < kDeckDof; ++d) {
                s.channels[d][i] = position(d, t);
                s.channels[d + kDeckDof][i] = rate(d, t);
            }
        }
        return s;
    }

    static DeckMotionModel calm() { return {}; }
};

// --- synthetic generator -----------------------------------------------------

namespace deck_detail {

struct BaseTerm {
    double amplitude;
    double omega;
};

/// Low-sea, heave-dominated base spectrum per channel (ft or rad).
inline const std::array<std::vector<BaseTerm>, kDeckDof>& base_terms() {
    static const std::array<std::vector<BaseTerm>, kDeckDof> t{{
        {{0.6, 0.50}, {0.3, 0.70}, {0.1, 1.00}},                          // surge
        {{0.8, 0.45}, {0.3, 0.65}, {0.1, 0.90}},                          // sway
        {{1.2, 0.55}, {0.5, 0.75}, {0.3, 0.95}, {0.15, 1.20}},            // heave
        {{0.010, 0.45}, {0.005, 0.70}, {0.002, 0.90}},                    // roll
        {{0.005, 0.62}, {0.002, 0.80}, {0.001, 1.00}, {0.0005, 1.25}},    // pitch
        {{0.004, 0.40}, {0.002, 0.70}, {0.001, 1.00}},                    // yaw
    }};
    return t;
}

inline double level_scale(SeaLevel l) {
    switch (l) {
        case SeaLevel::low: return 1.0;
        case SeaLevel::medium: return 2.0;
        case SeaLevel::high: return 3.5;
    }
    return 1.0;
}

}  // namespace deck_detail

/// Sum-of-sinusoids deck motion for a sea state; phases drawn from `seed`.
inline DeckMotionModel synthetic_deck_model(const SeaState& sea, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    DeckMotionModel m;
    const double scale = deck_detail::level_scale(sea.level);
    for (std::size_t d = 0; d < kDeckDof; ++d) {
        double k = scale;
        if (sea.dominance == SeaDominance::roll) {
            if (d == 3) k *= 3.0;
            if (d == 2) k *= 0.6;
        }
        for (const auto& b : deck_detail::base_terms()[d]) m.channels[d].terms.push_back({b.amplitude * k, b.omega, phase(rng)});
    }
    return m;
}

inline DeckMotionSeries generate_deck_series(const SeaState& sea, double duration, std::uint64_t seed) {
    return synthetic_deck_model(sea, seed).sample(duration, sea.label());
}

// --- fitting -----------------------------------------------------------------

struct FitOptions {
    int n_terms = 5;               // per channel, at most 8
    int max_iterations = 100;      // Levenberg-Marquardt
    double max_relative_residual = 0.5;  // FitDiverged above this residual/RMS
    double min_omega = 0.05;       // rad/s, lower edge of the peak search
};

namespace deck_detail {

/// Magnitude-peak frequency of y (mean removed), rad/s, refined by parabolic
/// interpolation on a zero-padded, Hann-windowed spectrum.
inline double dominant_frequency(const std::vector<double>& y, double dt, double min_omega) {
    const std::size_t n = y.size();
    std::size_t nfft = 1;
    while (nfft < 4 * n) nfft <<= 1;
    std::vector<double> in(nfft, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) / static_cast<double>(n - 1));
        in[i] = w * y[i];
    }
    std::vector<std::complex<double>> out(nfft / 2 + 1);
    static std::mutex planner;  // FFTW planning is not thread-safe
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner);
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(nfft), in.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner);
        fftw_destroy_plan(plan);
    }
    const double domega = 2.0 * kPi / (static_cast<double>(nfft) * dt);
    const std::size_t k0 = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(min_omega / domega)));
    std::size_t best = k0;
    for (std::size_t k = k0; k + 1 < out.size(); ++k)
        if (std::abs(out[k]) > std::abs(out[best])) best = k;
    double shift = 0.0;
    if (best > 0 && best + 1 < out.size()) {
        const double a = std::log(std::abs(out[best - 1]) + 1e-300);
        const double b = std::log(std::abs(out[best]) + 1e-300);
        const double c = std::log(std::abs(out[best + 1]) + 1e-300);
        const double den = a - 2.0 * b + c;
        if (den < 0.0) shift = std::clamp(0.5 * (a - c) / den, -0.5, 0.5);
    }
    return (static_cast<double>(best) + shift) * domega;
}

/// Linear least squares for offset and a_k sin + b_k cos at fixed frequencies.
inline void linear_fit(const Eigen::VectorXd& t, const Eigen::VectorXd& y, const std::vector<double>& omegas,
                       ChannelModel& m) {
    const Eigen::Index n = t.size();
    const Eigen::Index k = static_cast<Eigen::Index>(omegas.size());
    Eigen::MatrixXd A(n, 1 + 2 * k);
    A.col(0).setOnes();
    for (Eigen::Index j = 0; j < k; ++j) {
        A.col(1 + 2 * j) = (omegas[j] * t).array().sin().matrix();
        A.col(2 + 2 * j) = (omegas[j] * t).array().cos().matrix();
    }
    const Eigen::VectorXd c = A.colPivHouseholderQr().solve(y);
    m.offset = c(0);
    m.terms.clear();
    for (Eigen::Index j = 0; j < k; ++j) {
        const double a = c(1 + 2 * j), b = c(2 + 2 * j);
        m.terms.push_back({std::hypot(a, b), omegas[j], std::atan2(b, a)});
    }
}

inline Eigen::VectorXd evaluate(const ChannelModel& m, const Eigen::VectorXd& t) {
    Eigen::VectorXd y = Eigen::VectorXd::Constant(t.size(), m.offset);
    for (const auto& k : m.terms) y += k.amplitude * (k.omega * t.array() + k.phase).sin().matrix();
    return y;
}

/// Joint refinement of offset and every (A, omega, phase) by Levenberg-Marquardt.
inline void refine(const Eigen::VectorXd& t, const Eigen::VectorXd& y, ChannelModel& m, int max_iterations) {
    const Eigen::Index K = static_cast<Eigen::Index>(m.terms.size());
    const Eigen::Index P = 1 + 3 * K;
    auto pack = [&](const ChannelModel& c) {
        Eigen::VectorXd p(P);
        p(0) = c.offset;
        for (Eigen::Index j = 0; j < K; ++j) {
            p(1 + 3 * j) = c.terms[j].amplitude;
            p(2 + 3 * j) = c.terms[j].omega;
            p(3 + 3 * j) = c.terms[j].phase;
        }
        return p;
    };
    auto unpack = [&](const Eigen::VectorXd& p) {
        ChannelModel c = m;
        c.offset = p(0);
        for (Eigen::Index j = 0; j < K; ++j) c.terms[j] = {p(1 + 3 * j), p(2 + 3 * j), p(3 + 3 * j)};
        return c;
    };
    Eigen::VectorXd p = pack(m);
    Eigen::VectorXd r = y - evaluate(m, t);
    double cost = r.squaredNorm();
    double lambda = 1e-3;
    const Eigen::Index n = t.size();
    for (int it = 0; it < max_iterations; ++it) {
        const ChannelModel c = unpack(p);
        Eigen::MatrixXd J(n, P);
        J.col(0).setOnes();
        for (Eigen::Index j = 0; j < K; ++j) {
            const auto& k = c.terms[j];
            const Eigen::ArrayXd arg = k.omega * t.array() + k.phase;
            const Eigen::ArrayXd s = arg.sin(), co = arg.cos();
            J.col(1 + 3 * j) = s.matrix();
            J.col(2 + 3 * j) = (k.amplitude * t.array() * co).matrix();
            J.col(3 + 3 * j) = (k.amplitude * co).matrix();
        }
        const Eigen::MatrixXd JtJ = J.transpose() * J;
        const Eigen::VectorXd g = J.transpose() * r;
        bool improved = false;
        for (int tries = 0; tries < 20 && !improved; ++tries) {
            Eigen::MatrixXd H = JtJ;
            H.diagonal() += lambda * JtJ.diagonal().cwiseMax(1e-12);
            const Eigen::VectorXd dp = H.ldlt().solve(g);
            const Eigen::VectorXd pn = p + dp;
            const Eigen::VectorXd rn = y - evaluate(unpack(pn), t);
            const double cn = rn.squaredNorm();
            if (std::isfinite(cn) && cn < cost) {
                const double rel = (cost - cn) / std::max(cost, 1e-300);
                p = pn;
                r = rn;
                cost = cn;
                lambda = std::max(lambda / 10.0, 1e-12);
                improved = true;
                if (rel < 1e-12) it = max_iterations;
            } else {
                lambda *= 10.0;
            }
        }
        if (!improved) break;
    }
    m = unpack(p);
    for (auto& k : m.terms) {
        if (k.amplitude < 0.0) {
            k.amplitude = -k.amplitude;
            k.phase += kPi;
        }
        k.phase = std::remainder(k.phase, 2.0 * kPi);
    }
}

}  // namespace deck_detail

/// Fits each displacement channel with up to n_terms sinusoids plus an offset.
/// Frequencies are seeded from successive FFT peaks of the residual, then all
/// parameters are refined jointly. Throws FitDiverged when the final residual
/// exceeds `max_relative_residual` of the channel RMS.
inline DeckMotionModel fit_deck_motion(const DeckMotionSeries& series, const FitOptions& opt = {}) {
    if (opt.n_terms < 1 || opt.n_terms > 8) throw RangeError("n_terms must be in [1, 8]");
    if (series.duration() < 60.0) throw RangeError("deck-motion fit needs at least 60 s of data");
    const std::size_t n = series.size();
    const double dt = 1.0 / series.sample_rate;
    const Eigen::VectorXd t = Eigen::Map<const Eigen::VectorXd>(series.time.data(), static_cast<Eigen::Index>(n));

    DeckMotionModel model;
    for (std::size_t d = 0; d < kDeckDof; ++d) {
        const Eigen::VectorXd y =
            Eigen::Map<const Eigen::VectorXd>(series.channels[d].data(), static_cast<Eigen::Index>(n));
        ChannelModel& m = model.channels[d];
        const double mean = y.mean();
        m.rms_signal = std::sqrt((y.array() - mean).square().mean());
        m.offset = mean;
        if (m.rms_signal < 1e-12) {
            m.rms_residual = m.rms_signal;
            continue;
        }
        std::vector<double> omegas;
        Eigen::VectorXd resid = y.array() - mean;
        for (int k = 0; k < opt.n_terms; ++k) {
            if (std::sqrt(resid.squaredNorm() / static_cast<double>(n)) < 1e-9 * m.rms_signal) break;
            std::vector<double> r(resid.data(), resid.data() + resid.size());
            omegas.push_back(deck_detail::dominant_frequency(r, dt, opt.min_omega));
            deck_detail::linear_fit(t, y, omegas, m);
            resid = y - deck_detail::evaluate(m, t);
        }
        deck_detail::refine(t, y, m, opt.max_iterations);
        resid = y - deck_detail::evaluate(m, t);
        m.rms_residual = std::sqrt(resid.squaredNorm() / static_cast<double>(n));
        if (!std::isfinite(m.rms_residual) || m.rms_residual > opt.max_relative_residual * m.rms_signal) {
            std::ostringstream os;
            os << "fit of " << deck_channel_names()[d] << " stalled at residual " << m.rms_residual << " (signal RMS "
               << m.rms_signal << ")";
            throw FitDiverged(os.str());
        }
    }
    return model;
}

// --- geometry ----------------------------------------------------------------

struct DeckGeometry {
    std::array<double, 4> wires{-80.0, -40.0, 0.0, 40.0};  // ft from target, astern to bow
    double capture_margin = 2.0;     // ft
    double safe_edge = 5.0;          // ft beyond wire 4
    double ramp = -180.0;            // ft from target
    double cop_forward = 300.0;      // centre of pitch ahead of the target, ft
    double angled_deck_deg = 9.0;    // centerline rotated to port of the ship axis
    double deck_height = 60.0;       // ft above the waterline
    std::vector<Eigen::Vector2d> landing_area{{-180.0, -40.0}, {600.0, -40.0}, {600.0, 40.0}, {-180.0, 40.0}};

    void validate() const {
        for (std::size_t i = 1; i < wires.size(); ++i)
            if (!(wires[i] > wires[i - 1])) throw RangeError("deck.wires must increase astern to bow");
        if (!(capture_margin > 0.0)) throw RangeError("deck.capture_margin must be positive");
        if (!(safe_edge >= 0.0)) throw RangeError("deck.safe_edge must be non-negative");
        if (!(ramp < wires.front())) throw RangeError("deck.ramp must lie astern of wire 1");
        if (landing_area.size() < 3) throw RangeError("deck.landing_area needs at least three vertices");
    }
};

/// Even-odd rule; points on an edge count as inside.
inline bool inside_polygon(const std::vector<Eigen::Vector2d>& poly, double x, double y) {
    bool in = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const auto& a = poly[i];
        const auto& b = poly[j];
        const double cross = (b.x() - a.x()) * (y - a.y()) - (b.y() - a.y()) * (x - a.x());
        if (std::abs(cross) < 1e-9 && x >= std::min(a.x(), b.x()) - 1e-9 && x <= std::max(a.x(), b.x()) + 1e-9 &&
            y >= std::min(a.y(), b.y()) - 1e-9 && y <= std::max(a.y(), b.y()) + 1e-9)
            return true;
        if ((a.y() > y) != (b.y() > y) && x < (b.x() - a.x()) * (y - a.y()) / (b.y() - a.y()) + a.x()) in = !in;
    }
    return in;
}

// --- deck kinematics ---------------------------------------------------------

struct DeckState {
    double t = 0.0;
    Eigen::Vector3d target = Eigen::Vector3d::Zero();           // NED position of the target, ft
    Eigen::Vector3d target_velocity = Eigen::Vector3d::Zero();  // NED, ft/s
    Eigen::Matrix3d deck_to_ned = Eigen::Matrix3d::Identity();
    double roll = 0.0, pitch = 0.0, yaw = 0.0;  // oscillatory ship attitude, rad
    double ship_speed_kn = 0.0;

    Eigen::Vector3d to_deck(const Eigen::Vector3d& p_ned) const { return deck_to_ned.transpose() * (p_ned - target); }
    Eigen::Vector3d velocity_to_deck(const Eigen::Vector3d& v_ned) const { return deck_to_ned.transpose() * v_ned; }
    /// Target altitude above the sea surface, ft.
    double target_altitude() const { return -target.z(); }
};

namespace deck_detail {

inline Eigen::Matrix3d rot_z(double a) {
    Eigen::Matrix3d R;
    R << std::cos(a), -std::sin(a), 0.0, std::sin(a), std::cos(a), 0.0, 0.0, 0.0, 1.0;
    return R;
}

/// Time derivative of the 3-2-1 rotation for Euler rates (dphi, dtheta, dpsi).
inline Eigen::Matrix3d rotation_rate(double phi, double theta, double psi, double dphi, double dtheta, double dpsi) {
    // Body rates from Euler rates, then R' = R [w]x.
    const double p = dphi - dpsi * std::sin(theta);
    const double q = dtheta * std::cos(phi) + dpsi * std::sin(phi) * std::cos(theta);
    const double r = -dtheta * std::sin(phi) + dpsi * std::cos(phi) * std::cos(theta);
    Eigen::Matrix3d W;
    W << 0.0, -r, q, r, 0.0, -p, -q, p, 0.0;
    return body_to_ned(phi, theta, psi) * W;
}

}  // namespace deck_detail

/// Deck pose at time t. The centerline heading is zero (north); the ship axis
/// points `angled_deck_deg` to starboard of it and the ship steams along its axis.
/// At t = 0 with a calm model the target sits at (0, 0, -deck_height).
inline DeckState deck_state_at(const DeckMotionModel& model, double t, double ship_speed_kn,
                               const DeckGeometry& geo = {}, double model_time_offset = 0.0) {
    const double tm = t + model_time_offset;
    const double lambda = deg2rad(geo.angled_deck_deg);
    const double V = knots_to_fps(ship_speed_kn);
    const Eigen::Matrix3d heading = deck_detail::rot_z(lambda);

    double pos[kDeckDof], rate[kDeckDof];
    for (std::size_t d = 0; d < kDeckDof; ++d) {
        pos[d] = model.position(d, tm);
        rate[d] = model.rate(d, tm);
    }
    DeckState s;
    s.t = t;
    s.ship_speed_kn = ship_speed_kn;
    s.roll = pos[3];
    s.pitch = pos[4];
    s.yaw = pos[5];

    const Eigen::Matrix3d R_ship = body_to_ned(pos[3], pos[4], lambda + pos[5]);
    const Eigen::Matrix3d R_ship_dot =
        deck_detail::rotation_rate(pos[3], pos[4], lambda + pos[5], rate[3], rate[4], rate[5]);
    const Eigen::Matrix3d to_centerline = deck_detail::rot_z(-lambda);
    s.deck_to_ned = R_ship * to_centerline;

    // Centre of pitch: rest position, mean motion, then oscillatory translation.
    const Eigen::Vector3d cop0(geo.cop_forward, 0.0, -geo.deck_height);
    const Eigen::Vector3d ship_axis = heading * Eigen::Vector3d::UnitX();
    const Eigen::Vector3d osc(pos[0], pos[1], -pos[2]);
    const Eigen::Vector3d osc_rate(rate[0], rate[1], -rate[2]);
    const Eigen::Vector3d cop = cop0 + V * t * ship_axis + heading * osc;
    const Eigen::Vector3d cop_velocity = V * ship_axis + heading * osc_rate;

    // Target relative to the centre of pitch, in ship axes.
    const Eigen::Vector3d r_target = to_centerline * Eigen::Vector3d(-geo.cop_forward, 0.0, 0.0);
    s.target = cop + R_ship * r_target;
    s.target_velocity = cop_velocity + R_ship_dot * r_target;
    return s;
}

// --- touchdown scoring -------------------------------------------------------

enum class TouchdownClass { trap, bolter, rampstrike, out_of_deck };

struct TouchdownRecord {
    double x = 0.0;  // ft along the centerline from the target
    double y = 0.0;  // ft to starboard
    TouchdownClass outcome = TouchdownClass::trap;
    int wire = 0;    // 1..4 for a trap
};

/// Scores a hook contact at deck-frame (x, y). The hook engages the first wire
/// at or ahead of x - capture_margin; contact up to safe_edge past wire 4 still
/// engages wire 4.
inline TouchdownRecord score_touchdown_point(double x, double y, const DeckGeometry& geo) {
    TouchdownRecord rec;
    rec.x = x;
    rec.y = y;
    if (x < geo.ramp) {
        rec.outcome = TouchdownClass::rampstrike;
        return rec;
    }
    if (!inside_polygon(geo.landing_area, x, y)) {
        rec.outcome = TouchdownClass::out_of_deck;
        return rec;
    }
    if (x > geo.wires.back() + geo.safe_edge) {
        rec.outcome = TouchdownClass::bolter;
        return rec;
    }
    rec.outcome = TouchdownClass::trap;
    rec.wire = static_cast<int>(geo.wires.size());
    for (std::size_t i = 0; i < geo.wires.size(); ++i) {
        if (geo.wires[i] >= x - geo.capture_margin) {
            rec.wire = static_cast<int>(i) + 1;
            break;
        }
    }
    return rec;
}

/// Scores the hook point of an aircraft in contact with the deck.
inline TouchdownRecord score_touchdown(const AircraftState& s, const Eigen::Vector3d& hook_offset_body,
                                       const DeckState& deck, const DeckGeometry& geo) {
    const Eigen::Vector3d cg(s.x_n, s.y_e, -s.h);
    const Eigen::Vector3d hook = cg + body_to_ned(s) * hook_offset_body;
    const Eigen::Vector3d d = deck.to_deck(hook);
    return score_touchdown_point(d.x(), d.y(), geo);
}

}  // namespace acl
