#pragma once

/**
 * Baseline landing control system: attitude SAS, glideslope and approach-track
 * PIDs, and the auto-throttle.
 *
 * Sign conventions
 *   eps_theta = theta_d - theta, eps_phi = phi_d - phi            (rad)
 *   eps_psi   = psi - psi_d                                       (rad)
 *   eps_h     = h - h_glideslope  (positive high)                  (ft)
 *   y_e       = y - y_centerline  (positive right of centerline)  (ft)
 *   beta_e    = beta - beta_d                                     (deg)
 * The yaw channel uses measured-minus-desired so that the positive tuned
 * gains act through the rudder's negative yaw-control derivative.
 */

#include "acl/airframe.hpp"
#include "acl/common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace acl {

struct PidGains {
    double P = 0.0;
    double I = 0.0;
    double D = 0.0;

    PidGains scaled(double k) const { return {P * k, I * k, D * k}; }
};

inline constexpr double kDerivativeFilterTau = 0.02;  // s

/// PID with a first-order filtered derivative and integrator clamping.
///
/// The derivative is the backward difference of the error after a first-order
/// low-pass (time constant `tau`), so a ramp of slope k settles to exactly k.
/// The integral term alone never exceeds +/- `integral_limit` in output units.
class Pid {
public:
    Pid() = default;
    Pid(PidGains gains, double integral_limit = std::numeric_limits<double>::infinity(),
        double tau = kDerivativeFilterTau)
        : gains_(gains), integral_limit_(integral_limit), tau_(tau) {}

    double update(double error, double dt) {
        if (!initialized_) {
            filtered_ = error;
            initialized_ = true;
        }
        const double a = std::exp(-dt / tau_);
        const double prev = filtered_;
        filtered_ = a * filtered_ + (1.0 - a) * error;
        derivative_ = (filtered_ - prev) / dt;

        integral_ += error * dt;
        if (gains_.I != 0.0 && std::isfinite(integral_limit_)) {
            const double bound = integral_limit_ / std::abs(gains_.I);
            integral_ = std::clamp(integral_, -bound, bound);
        }
        last_ = {gains_.P * error, gains_.I * integral_, gains_.D * derivative_};
        return last_.P + last_.I + last_.D;
    }

    void reset() {
        integral_ = 0.0;
        filtered_ = 0.0;
        derivative_ = 0.0;
        initialized_ = false;
        last_ = {};
    }

    const PidGains& gains() const { return gains_; }
    double integral() const { return integral_; }
    /// Individual P, I and D contributions of the latest update.
    const PidGains& last_terms() const { return last_; }

private:
    PidGains gains_;
    double integral_limit_ = std::numeric_limits<double>::infinity();
    double tau_ = kDerivativeFilterTau;
    double integral_ = 0.0;
    double filtered_ = 0.0;
    double derivative_ = 0.0;
    bool initialized_ = false;
    PidGains last_;
};

/// How the outer-loop PID outputs are scaled into attitude commands.
enum class AngleUnit { rad, deg };

struct ControlGains {
    PidGains theta{-53.227, -2.354, -97.452};
    PidGains phi{-14.997, -0.7946, -62.889};
    PidGains psi{179551.93, 758023.01, 3565.813};
    PidGains glideslope{-0.02736, -0.000959, -0.17342};
    PidGains lateral{-0.02736, -0.000959, -0.17342};
    PidGains sideslip{9109.4, 35962.11, 308.67};
    double speed_gain = 73.0;  // K_u, 1/s

    /// Multipliers on the psi and sideslip gains (1e-3 on psi gives the de-tuned mode).
    double psi_gain_scale = 1.0;
    double sideslip_gain_scale = 0.0;  // the sideslip loop is off unless scaled in
    AngleUnit glideslope_output = AngleUnit::deg;
    AngleUnit lateral_output = AngleUnit::deg;

    double bank_limit_deg = 15.0;
    double yaw_rate_limit = deg2rad(10.0);  // rad/s, clamp on r_d
    double pitch_command_span_deg = 10.0;   // integral-term bound of the glideslope loop
    double throttle_guard = 0.2;
    /// Adds the coordinated-turn rate g*tan(phi)/V to the heading reference so
    /// that the stiff psi hold does not fight the lateral loop's bank command.
    bool turn_coordination = true;
};

struct ControlCommand {
    SurfaceDeflections demand;     // before saturation
    SurfaceDeflections saturated;  // fed to the actuators
    double throttle = 0.0;
    double throttle_demand = 0.0;  // before clamping
};

struct GuidanceErrors {
    double eps_h = 0.0;      // ft
    double y_e = 0.0;        // ft
    double beta_e = 0.0;     // deg
    double eps_theta = 0.0;  // rad
    double eps_phi = 0.0;    // rad
    double eps_psi = 0.0;    // rad
};

/// Integrator-clamp bounds per SAS channel, equal to the surface saturation span.
struct SasLimits {
    SurfaceLimits surfaces;
};

struct SasPids {
    Pid theta, phi, psi;

    SasPids() = default;
    SasPids(const ControlGains& g, const SurfaceLimits& lim)
        : theta(g.theta, lim.elevator),
          phi(g.phi, lim.aileron),
          psi(g.psi.scaled(g.psi_gain_scale), lim.rudder) {}
};

/// Attitude SAS: demands = (delta_e_trim + PID_theta, PID_phi, PID_psi), saturated.
inline ControlCommand sas_command(const GuidanceErrors& e, double elevator_trim, SasPids& pids, double dt,
                                  const SurfaceLimits& limits = {}) {
    ControlCommand cmd;
    cmd.demand.elevator = elevator_trim + pids.theta.update(e.eps_theta, dt);
    cmd.demand.aileron = pids.phi.update(e.eps_phi, dt);
    cmd.demand.rudder = pids.psi.update(e.eps_psi, dt);
    cmd.saturated = saturate(cmd.demand, limits);
    return cmd;
}

inline double to_radians(double value, AngleUnit unit) {
    return unit == AngleUnit::rad ? value : deg2rad(value);
}

/// theta_d = theta_trim + PID_gs(eps_h), rad.
inline double glideslope_command(double eps_h, double theta_trim, Pid& pid, double dt,
                                 AngleUnit unit = AngleUnit::rad) {
    return theta_trim + to_radians(pid.update(eps_h, dt), unit);
}

struct TrackCommand {
    double phi_d = 0.0;  // rad
    double r_d = 0.0;    // rad/s
    double phi_d_unclamped = 0.0;
    double r_d_unclamped = 0.0;
};

/// phi_d = PID_y(y_e) clamped to the bank limit; r_d = PID_beta(beta_e).
inline TrackCommand approach_track_command(double y_e, double beta_e, Pid& lateral, Pid& sideslip, double dt,
                                           AngleUnit unit = AngleUnit::rad,
                                           double bank_limit = deg2rad(15.0),
                                           double yaw_rate_limit = std::numeric_limits<double>::infinity()) {
    TrackCommand tc;
    tc.phi_d_unclamped = to_radians(lateral.update(y_e, dt), unit);
    tc.phi_d = std::clamp(tc.phi_d_unclamped, -bank_limit, bank_limit);
    tc.r_d_unclamped = sideslip.update(beta_e, dt);
    tc.r_d = std::clamp(tc.r_d_unclamped, -yaw_rate_limit, yaw_rate_limit);
    return tc;
}

/// Unclamped thrust fraction from the first-order speed-error law.
inline double autothrottle_demand(double V, double V_target, double drag, double gamma_rad, double alpha_deg,
                                  double beta_deg, const AircraftParams& params, double speed_gain = 73.0,
                                  double guard = 0.2) {
    const double cos_product = std::cos(deg2rad(alpha_deg)) * std::cos(deg2rad(beta_deg));
    if (cos_product < guard) {
        std::ostringstream os;
        os << "auto-throttle guard: cos(alpha)cos(beta) = " << cos_product << " below " << guard;
        throw ThrottleGuard(os.str());
    }
    const double m = params.mass;
    return (m * speed_gain * (V_target - V) + drag + m * params.gravity * std::sin(gamma_rad)) /
           (params.max_thrust * cos_product);
}

/// Throttle fraction in [0, 1].
inline double autothrottle(double V, double V_target, double drag, double gamma_rad, double alpha_deg,
                           double beta_deg, const AircraftParams& params, double speed_gain = 73.0,
                           double guard = 0.2) {
    return std::clamp(
        autothrottle_demand(V, V_target, drag, gamma_rad, alpha_deg, beta_deg, params, speed_gain, guard), 0.0,
        1.0);
}

/// Measurements the autopilot consumes each step.
struct ControlInputs {
    double theta = 0.0, phi = 0.0, psi = 0.0;  // rad
    double airspeed = 0.0;                     // ft/s
    double alpha = 0.0, beta = 0.0;            // deg
    double gamma = 0.0;                        // rad, air-relative flight path
    double drag = 0.0;                         // lb
    double eps_h = 0.0;                        // ft
    double y_e = 0.0;                          // ft
};

/// Trim feed-forwards handed to the autopilot.
struct ControlTrim {
    double airspeed = 0.0;  // ft/s
    double theta = 0.0;     // rad
    double elevator = 0.0;  // deg
    double psi = 0.0;       // rad, course heading
};

/// The complete four-loop controller with its per-episode state.
class Autopilot {
public:
    Autopilot(const ControlGains& gains, const ControlTrim& trim, const AircraftParams& params,
              const SurfaceLimits& limits = {})
        : gains_(gains),
          trim_(trim),
          params_(params),
          limits_(limits),
          sas_(gains, limits),
          glideslope_(gains.glideslope, output_span(gains.pitch_command_span_deg, gains.glideslope_output)),
          lateral_(gains.lateral, output_span(gains.bank_limit_deg, gains.lateral_output)),
          sideslip_(gains.sideslip.scaled(gains.sideslip_gain_scale), gains.yaw_rate_limit),
          psi_d_(trim.psi) {}

    ControlCommand update(const ControlInputs& in, double dt) {
        theta_d_ = glideslope_command(in.eps_h, trim_.theta, glideslope_, dt, gains_.glideslope_output);
        const TrackCommand track = approach_track_command(in.y_e, in.beta, lateral_, sideslip_, dt,
                                                          gains_.lateral_output, deg2rad(gains_.bank_limit_deg),
                                                          gains_.yaw_rate_limit);
        phi_d_ = track.phi_d;
        r_d_ = track.r_d;
        double psi_rate = r_d_;
        if (gains_.turn_coordination && in.airspeed > 1.0)
            psi_rate += params_.gravity * std::tan(in.phi) / in.airspeed;
        psi_d_ += psi_rate * dt;

        errors_.eps_h = in.eps_h;
        errors_.y_e = in.y_e;
        errors_.beta_e = in.beta;
        errors_.eps_theta = theta_d_ - in.theta;
        errors_.eps_phi = phi_d_ - in.phi;
        errors_.eps_psi = wrap_angle(in.psi - psi_d_);

        ControlCommand cmd = sas_command(errors_, trim_.elevator, sas_, dt, limits_);
        cmd.throttle_demand = autothrottle_demand(in.airspeed, trim_.airspeed, in.drag, in.gamma, in.alpha,
                                                  in.beta, params_, gains_.speed_gain, gains_.throttle_guard);
        cmd.throttle = std::clamp(cmd.throttle_demand, 0.0, 1.0);
        return cmd;
    }

    double theta_d() const { return theta_d_; }
    double phi_d() const { return phi_d_; }
    double psi_d() const { return psi_d_; }
    double r_d() const { return r_d_; }
    const GuidanceErrors& errors() const { return errors_; }

    static double wrap_angle(double a) { return std::remainder(a, 2.0 * kPi); }

    /// A span in degrees expressed in a loop's output unit.
    static double output_span(double span_deg, AngleUnit unit) {
        return unit == AngleUnit::deg ? span_deg : deg2rad(span_deg);
    }

private:
    ControlGains gains_;
    ControlTrim trim_;
    AircraftParams params_;
    SurfaceLimits limits_;
    SasPids sas_;
    Pid glideslope_, lateral_, sideslip_;
    double psi_d_ = 0.0;
    double theta_d_ = 0.0, phi_d_ = 0.0, r_d_ = 0.0;
    GuidanceErrors errors_;
};

}  // namespace acl
