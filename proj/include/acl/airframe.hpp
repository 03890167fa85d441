#pragma once

/**
 * HARV airframe: physical constants, the piecewise aerodynamic coefficient
 * model, force/moment dimensionalization, surface actuators and the engine.
 *
 * Angles handed to the coefficient model are in degrees, surface deflections
 * in degrees, body rates non-dimensional (p b/2V, q c/2V, r b/2V) unless the
 * raw-rate convention is selected.
 */

#include "acl/common.hpp"
#include "acl/lti.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace acl {

/// Which lift law applies above alpha = 10 deg.
enum class LiftCurve {
    piecewise,        ///< printed quadratic segment for 10 < alpha <= 40
    linear_extended,  ///< low-alpha linear law used over the whole range
};

/// Interpretation of p, q, r inside the coefficient equations.
enum class RateConvention { nondimensional, raw };

struct AeroOptions {
    LiftCurve lift_curve = LiftCurve::piecewise;
    RateConvention rates = RateConvention::nondimensional;
};

struct AircraftParams {
    double wing_area = 400.0;       // ft^2
    double span = 37.42;            // ft
    double mean_chord = 11.52;      // ft
    double mass = 1036.0;           // slug
    double max_thrust = 11200.0;    // lb
    double Ixx = 23000.0;           // slug ft^2
    double Iyy = 151293.0;
    double Izz = 169945.0;
    double gravity = kStandardGravity;
    // Effective density reproducing the published trim table; see README.
    double air_density = 0.00291;   // slug/ft^3
    AeroOptions aero{LiftCurve::linear_extended, RateConvention::nondimensional};

    double weight() const { return mass * gravity; }

    /// Throws RangeError unless every physical field is strictly positive.
    void validate() const {
        const std::array<std::pair<const char*, double>, 10> fields{{
            {"wing_area", wing_area}, {"span", span}, {"mean_chord", mean_chord},
            {"mass", mass}, {"max_thrust", max_thrust}, {"Ixx", Ixx}, {"Iyy", Iyy},
            {"Izz", Izz}, {"gravity", gravity}, {"air_density", air_density}}};
        for (const auto& [name, value] : fields) {
            if (!(value > 0.0) || !std::isfinite(value)) {
                std::ostringstream os;
                os << "aircraft." << name << " must be positive, got " << value;
                throw RangeError(os.str());
            }
        }
    }
};

struct AeroAngles {
    double alpha = 0.0;  // deg
    double beta = 0.0;   // deg
};

inline constexpr double kAlphaMin = -5.0;
inline constexpr double kAlphaMax = 40.0;

struct CoeffSet {
    double CD = 0.0, CL = 0.0, CY = 0.0;
    double Cl = 0.0, Cm = 0.0, Cn = 0.0;
};

/// Body rates as they enter the coefficient equations.
struct AeroRates {
    double p = 0.0, q = 0.0, r = 0.0;
};

struct SurfaceDeflections {
    double elevator = 0.0;  // deg
    double aileron = 0.0;
    double rudder = 0.0;
};

struct SurfaceLimits {
    double elevator = 24.0;
    double aileron = 25.0;
    double rudder = 30.0;
};

inline SurfaceDeflections saturate(const SurfaceDeflections& d, const SurfaceLimits& lim = {}) {
    return {std::clamp(d.elevator, -lim.elevator, lim.elevator),
            std::clamp(d.aileron, -lim.aileron, lim.aileron),
            std::clamp(d.rudder, -lim.rudder, lim.rudder)};
}

// --- coefficient segments ---------------------------------------------------
// Alpha exactly on a breakpoint belongs to the lower-alpha segment.

namespace aero_detail {

inline double drag_low(double a) { return 0.0013 * a * a - 0.00438 * a + 0.1423; }
inline double drag_high(double a) { return -0.00000348 * a * a + 0.0473 * a - 0.3580; }
inline double lift_low(double a, double de) { return 0.0751 * a + 0.0144 * de + 0.732; }
inline double lift_high(double a, double de) { return -0.00148 * a * a + 0.106 * a + 0.0144 * de + 0.569; }
inline double roll_beta_low(double a) { return -0.00012 * a - 0.00092; }
inline double roll_beta_high(double a) { return 0.00022 * a - 0.006; }
inline double yaw_beta_low(double) { return 0.00125; }
inline double yaw_beta_mid(double a) { return -0.00022 * a + 0.00342; }
inline double yaw_beta_high(double) { return -0.00201; }

}  // namespace aero_detail

/// Six aerodynamic coefficients of the landing configuration.
/// Throws AlphaOutOfRange outside -5 <= alpha <= 40 deg.
inline CoeffSet aero_coefficients(const AeroAngles& angles, const AeroRates& rates,
                                  const SurfaceDeflections& s, const AeroOptions& opt = {}) {
    using namespace aero_detail;
    const double a = angles.alpha;
    const double b = angles.beta;
    if (!(a >= kAlphaMin && a <= kAlphaMax)) {
        std::ostringstream os;
        os << "angle of attack " << a << " deg outside [" << kAlphaMin << ", " << kAlphaMax << "]";
        throw AlphaOutOfRange(os.str());
    }
    const double da = s.aileron / 25.0;
    const double dr = s.rudder / 30.0;

    CoeffSet c;
    c.CD = a <= 20.0 ? drag_low(a) : drag_high(a);
    c.CL = (a <= 10.0 || opt.lift_curve == LiftCurve::linear_extended) ? lift_low(a, s.elevator)
                                                                        : lift_high(a, s.elevator);
    c.CY = -0.0186 * b + da * (-0.00227 * a + 0.039) + dr * (-0.00265 * a + 0.141);
    c.Cm = -0.00437 * a - 0.0196 * s.elevator - 0.123 * rates.q - 0.1885;

    const double cl_beta = (a <= 15.0 ? roll_beta_low(a) : roll_beta_high(a)) * b;
    c.Cl = cl_beta - 0.0315 * rates.p + 0.0216 * rates.r + da * (0.00121 * a - 0.0628) -
           dr * (0.000351 * a - 0.0124);

    double cn_beta;
    if (a <= 10.0)
        cn_beta = yaw_beta_low(a);
    else if (a <= 25.0)
        cn_beta = yaw_beta_mid(a);
    else
        cn_beta = yaw_beta_high(a);
    c.Cn = cn_beta * b - 0.0142 * rates.r + da * (0.000213 * a + 0.00128) + dr * (0.000804 * a - 0.0474);
    return c;
}

/// Converts body rates in rad/s to the form the coefficient equations expect.
inline AeroRates coefficient_rates(double p, double q, double r, double airspeed,
                                   const AircraftParams& params) {
    if (params.aero.rates == RateConvention::raw || airspeed <= 0.0) return {p, q, r};
    const double k_lat = params.span / (2.0 * airspeed);
    const double k_lon = params.mean_chord / (2.0 * airspeed);
    return {p * k_lat, q * k_lon, r * k_lat};
}

struct ForcesMoments {
    Eigen::Vector3d force = Eigen::Vector3d::Zero();   // body axes, lb
    Eigen::Vector3d moment = Eigen::Vector3d::Zero();  // body axes, ft lb
};

/// Dimensionalizes `c` at dynamic pressure `qbar`. Drag acts against the
/// air-relative velocity, lift normal to it in the symmetry plane, side
/// force along body y.
inline ForcesMoments forces_moments(const CoeffSet& c, double qbar, const AircraftParams& params,
                                    const AeroAngles& angles) {
    const double qs = qbar * params.wing_area;
    const double a = deg2rad(angles.alpha);
    const double b = deg2rad(angles.beta);
    const double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b);
    const double D = qs * c.CD;
    const double L = qs * c.CL;
    ForcesMoments fm;
    fm.force = {-D * ca * cb + L * sa, -D * sb + qs * c.CY, -D * sa * cb - L * ca};
    fm.moment = {qs * params.span * c.Cl, qs * params.mean_chord * c.Cm, qs * params.span * c.Cn};
    return fm;
}

/// Linear, lag-free engine: clamp(throttle, 0, 1) * T_max along body x.
inline double thrust(double throttle, const AircraftParams& params) {
    return std::clamp(throttle, 0.0, 1.0) * params.max_thrust;
}

// --- actuators --------------------------------------------------------------

struct SecondOrderActuatorSpec {
    double natural_frequency;  // rad/s
    double damping;
};

inline constexpr SecondOrderActuatorSpec kElevatorActuator{30.74, 0.509};
inline constexpr SecondOrderActuatorSpec kAileronActuator{75.0, 0.59};
inline constexpr SecondOrderActuatorSpec kRudderActuator{72.1, 0.69};

struct SurfaceState {
    double position = 0.0;  // deg
    double rate = 0.0;      // deg/s
};

struct ActuatorState {
    SurfaceState elevator, aileron, rudder;

    SurfaceDeflections positions() const {
        return {elevator.position, aileron.position, rudder.position};
    }
};

inline constexpr double kMaxActuatorStep = 0.01;

/// One surface channel discretized exactly for a fixed step.
class SecondOrderActuator {
public:
    SecondOrderActuator() = default;
    SecondOrderActuator(const SecondOrderActuatorSpec& spec, double dt, double limit)
        : limit_(limit) {
        if (!(dt > 0.0 && dt <= kMaxActuatorStep))
            throw std::invalid_argument("actuator step must satisfy 0 < dt <= 0.01 s");
        const double wn = spec.natural_frequency;
        Eigen::Matrix2d A;
        A << 0.0, 1.0, -wn * wn, -2.0 * spec.damping * wn;
        phi_ = (A * dt).exp();
    }

    /// Error-coordinate update (x - u)+ = Phi (x - u) keeps the DC gain at exactly one.
    SurfaceState step(const SurfaceState& s, double command) const {
        const Eigen::Vector2d e{s.position - command, s.rate};
        const Eigen::Vector2d next = phi_ * e;
        SurfaceState out{next(0) + command, next(1)};
        if (out.position > limit_) {
            out.position = limit_;
            out.rate = std::min(out.rate, 0.0);
        } else if (out.position < -limit_) {
            out.position = -limit_;
            out.rate = std::max(out.rate, 0.0);
        }
        return out;
    }

private:
    Eigen::Matrix2d phi_ = Eigen::Matrix2d::Identity();
    double limit_ = 0.0;
};

/// Elevator, aileron and rudder actuators sharing one step size.
class ActuatorBank {
public:
    ActuatorBank() = default;
    explicit ActuatorBank(double dt, const SurfaceLimits& limits = {})
        : elevator_(kElevatorActuator, dt, limits.elevator),
          aileron_(kAileronActuator, dt, limits.aileron),
          rudder_(kRudderActuator, dt, limits.rudder) {}

    ActuatorState step(const ActuatorState& s, const SurfaceDeflections& cmd) const {
        return {elevator_.step(s.elevator, cmd.elevator), aileron_.step(s.aileron, cmd.aileron),
                rudder_.step(s.rudder, cmd.rudder)};
    }

private:
    SecondOrderActuator elevator_, aileron_, rudder_;
};

/// Stateless convenience form; rebuilds the discretization on every call.
inline ActuatorState actuator_step(const ActuatorState& state, const SurfaceDeflections& command,
                                   double dt, const SurfaceLimits& limits = {}) {
    return ActuatorBank(dt, limits).step(state, command);
}

}  // namespace acl
