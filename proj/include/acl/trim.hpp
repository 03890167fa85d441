#pragma once

// Wings-level longitudinal trim on a straight glide path.

#include "acl/airframe.hpp"
#include "acl/common.hpp"
#include "acl/flight_dynamics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace acl {

struct TrimCondition {
    double airspeed = 0.0;  // ft/s
    double gamma = 0.0;     // deg
    double alpha = 0.0;     // deg
    double theta = 0.0;     // deg
    double elevator = 0.0;  // deg
    double thrust = 0.0;    // lb
    double residual_norm = 0.0;
    int iterations = 0;

    double throttle(const AircraftParams& params) const { return thrust / params.max_thrust; }
};

inline constexpr double kTrimSpeedMin = 140.0;
inline constexpr double kTrimSpeedMax = 260.0;

struct TrimGuess {
    double alpha = 8.0;
    double elevator = -12.0;
    double throttle = 0.3;
};

/// Aircraft state flying the trim condition at the origin with heading psi.
inline AircraftState trim_state(const TrimCondition& tc, double psi = 0.0, double altitude = 0.0) {
    AircraftState s;
    const double a = deg2rad(tc.alpha);
    s.u = tc.airspeed * std::cos(a);
    s.w = tc.airspeed * std::sin(a);
    s.theta = deg2rad(tc.theta);
    s.psi = psi;
    s.h = altitude;
    return s;
}

namespace trim_detail {

// Residuals: u'/g, w'/g and q' in rad/s^2.
inline Eigen::Vector3d residual(const Eigen::Vector3d& x, double V, double gamma_deg,
                                const AircraftParams& params) {
    TrimCondition tc;
    tc.airspeed = V;
    tc.alpha = x(0);
    tc.theta = x(0) + gamma_deg;
    const AircraftState s = trim_state(tc);
    const SurfaceDeflections surfaces{x(1), 0.0, 0.0};
    const AircraftState d = state_derivative(s, surfaces, x(2) * params.max_thrust, {}, params);
    return {d.u / params.gravity, d.w / params.gravity, d.q};
}

}  // namespace trim_detail

/// Newton iteration with a finite-difference Jacobian over (alpha, elevator, throttle).
/// Throws RangeError for speeds outside [140, 260] ft/s, AlphaOutOfRange when the
/// trim needs alpha above 40 deg, NoConvergence when the budget runs out or the
/// required thrust exceeds the engine.
inline TrimCondition solve_trim(double airspeed, double gamma_deg, const AircraftParams& params,
                                const TrimGuess& guess = {}, int max_iterations = 50,
                                double tolerance = 1e-6) {
    if (!(airspeed >= kTrimSpeedMin && airspeed <= kTrimSpeedMax)) {
        std::ostringstream os;
        os << "trim speed " << airspeed << " ft/s outside [" << kTrimSpeedMin << ", " << kTrimSpeedMax << "]";
        throw RangeError(os.str());
    }
    Eigen::Vector3d x{guess.alpha, guess.elevator, guess.throttle};
    // Margin keeps atan2 round-off inside the coefficient validity range.
    const double alpha_hi = kAlphaMax - 1e-6;
    const double alpha_lo = kAlphaMin + 1e-6;
    auto clamp_alpha = [&](double a) { return std::clamp(a, alpha_lo, alpha_hi); };
    x(0) = clamp_alpha(x(0));

    auto F = [&](const Eigen::Vector3d& v) { return trim_detail::residual(v, airspeed, gamma_deg, params); };
    Eigen::Vector3d r = F(x);
    int it = 0;
    bool pinned_high = false;
    for (; it < max_iterations && r.norm() >= tolerance; ++it) {
        Eigen::Matrix3d J;
        const std::array<double, 3> h{1e-5, 1e-5, 1e-7};
        for (int j = 0; j < 3; ++j) {
            Eigen::Vector3d xp = x, xm = x;
            xp(j) += h[j];
            xm(j) -= h[j];
            if (j == 0) {
                // One-sided near the validity edges.
                if (xp(0) > alpha_hi) xp(0) = x(0);
                if (xm(0) < alpha_lo) xm(0) = x(0);
            }
            J.col(j) = (F(xp) - F(xm)) / (xp(j) - xm(j));
        }
        Eigen::Vector3d dx = J.fullPivLu().solve(-r);
        // Damped step: limit alpha and elevator moves to 5 deg per iteration.
        const double scale = std::min({1.0, 5.0 / std::max(std::abs(dx(0)), 1e-12),
                                       5.0 / std::max(std::abs(dx(1)), 1e-12)});
        dx *= scale;
        Eigen::Vector3d next = x + dx;
        pinned_high = next(0) > alpha_hi;
        next(0) = clamp_alpha(next(0));
        if (pinned_high && x(0) >= alpha_hi) {
            std::ostringstream os;
            os << "trim at " << airspeed << " ft/s requires angle of attack above " << kAlphaMax << " deg";
            throw AlphaOutOfRange(os.str());
        }
        x = next;
        r = F(x);
    }
    if (r.norm() >= tolerance) {
        std::ostringstream os;
        os << "trim at " << airspeed << " ft/s did not converge in " << max_iterations
           << " iterations (residual " << r.norm() << ")";
        throw NoConvergence(os.str());
    }
    if (x(2) < 0.0 || x(2) > 1.0) {
        std::ostringstream os;
        os << "trim at " << airspeed << " ft/s needs thrust " << x(2) * params.max_thrust
           << " lb outside [0, " << params.max_thrust << "]";
        throw NoConvergence(os.str());
    }
    TrimCondition tc;
    tc.airspeed = airspeed;
    tc.gamma = gamma_deg;
    tc.alpha = x(0);
    tc.theta = x(0) + gamma_deg;
    tc.elevator = x(1);
    tc.thrust = x(2) * params.max_thrust;
    tc.residual_norm = r.norm();
    tc.iterations = it;
    return tc;
}

/// Warm-started continuation over a list of speeds. Failed rows carry the error text.
struct TrimRow {
    double airspeed = 0.0;
    std::optional<TrimCondition> trim;
    std::string error;
};

inline std::vector<TrimRow> solve_trim_table(const std::vector<double>& speeds, double gamma_deg,
                                             const AircraftParams& params) {
    std::vector<TrimRow> rows;
    rows.reserve(speeds.size());
    TrimGuess guess;
    for (double v : speeds) {
        TrimRow row;
        row.airspeed = v;
        try {
            try {
                row.trim = solve_trim(v, gamma_deg, params, guess);
            } catch (const NoConvergence&) {
                row.trim = solve_trim(v, gamma_deg, params);  // cold restart
            }
            guess = {row.trim->alpha, row.trim->elevator, row.trim->throttle(params)};
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Published reduced-speed trims at gamma = -3.5 deg (reference columns of the trim table).
struct PublishedTrim {
    double airspeed, alpha, theta, elevator, thrust;
};

inline const std::array<PublishedTrim, 11>& published_trims() {
    static const std::array<PublishedTrim, 11> rows{{
        {150, 23.3, 19.89, -14.83, 8540}, {155, 21.86, 18.37, -14.49, 7900}, {160, 20.39, 16.92, -14.16, 7300},
        {165, 19.01, 15.50, -13.85, 6720}, {170, 17.67, 14.22, -13.55, 6220}, {180, 15.26, 11.60, -13.02, 5200},
        {190, 13.08, 9.66, -12.53, 4600},  {200, 11.15, 7.67, -12.01, 4000},  {210, 9.45, 5.97, -11.72, 3600},
        {215, 8.67, 5.26, -11.55, 3500},   {220, 7.94, 4.46, -11.38, 3350},
    }};
    return rows;
}

inline std::optional<PublishedTrim> published_trim(double airspeed) {
    for (const auto& r : published_trims())
        if (std::abs(r.airspeed - airspeed) < 1e-9) return r;
    return std::nullopt;
}

}  // namespace acl
