#pragma once

// Flat-earth 6-DOF rigid-body equations of motion in body axes and a fixed-step
// RK4 integrator. Inertial frame is north-east-down with altitude h = -z.

#include "acl/airframe.hpp"
#include "acl/common.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

namespace acl {

inline constexpr double kEulerGuardDeg = 89.0;

struct AircraftState {
    double u = 0.0, v = 0.0, w = 0.0;          // body velocity, ft/s (inertial)
    double p = 0.0, q = 0.0, r = 0.0;          // body rates, rad/s
    double phi = 0.0, theta = 0.0, psi = 0.0;  // Euler angles, rad
    double x_n = 0.0, y_e = 0.0, h = 0.0;      // position, ft

    using Vector = Eigen::Matrix<double, 12, 1>;

    Vector to_vector() const {
        Vector x;
        x << u, v, w, p, q, r, phi, theta, psi, x_n, y_e, h;
        return x;
    }
    static AircraftState from_vector(const Vector& x) {
        return {x(0), x(1), x(2), x(3), x(4), x(5), x(6), x(7), x(8), x(9), x(10), x(11)};
    }

    Eigen::Vector3d body_velocity() const { return {u, v, w}; }
    double speed() const { return std::sqrt(u * u + v * v + w * w); }
};

/// Body-to-NED rotation for the 3-2-1 Euler sequence.
inline Eigen::Matrix3d body_to_ned(double phi, double theta, double psi) {
    const double cf = std::cos(phi), sf = std::sin(phi);
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cp = std::cos(psi), sp = std::sin(psi);
    Eigen::Matrix3d R;
    R << ct * cp, sf * st * cp - cf * sp, cf * st * cp + sf * sp,
         ct * sp, sf * st * sp + cf * cp, cf * st * sp - sf * cp,
         -st, sf * ct, cf * ct;
    return R;
}

inline Eigen::Matrix3d body_to_ned(const AircraftState& s) { return body_to_ned(s.phi, s.theta, s.psi); }

/// Wind acting on the airframe during one step, body axes.
struct BodyWind {
    Eigen::Vector3d velocity = Eigen::Vector3d::Zero();  // ft/s
    double pitch_rate_gust = 0.0;                        // rad/s
};

/// Air-relative quantities.
struct AirData {
    double airspeed = 0.0;  // ft/s
    double alpha = 0.0;     // deg
    double beta = 0.0;      // deg
    double qbar = 0.0;      // lb/ft^2
};

inline AirData air_data(const AircraftState& s, const BodyWind& wind, double density) {
    const Eigen::Vector3d va = s.body_velocity() - wind.velocity;
    AirData ad;
    ad.airspeed = va.norm();
    if (ad.airspeed > 0.0) {
        ad.alpha = rad2deg(std::atan2(va.z(), va.x()));
        ad.beta = rad2deg(std::asin(std::clamp(va.y() / ad.airspeed, -1.0, 1.0)));
    }
    ad.qbar = 0.5 * density * ad.airspeed * ad.airspeed;
    return ad;
}

/// Flight-path angle of a NED velocity, deg (positive climbing).
inline double flight_path_angle_deg(const Eigen::Vector3d& v_ned) {
    const double horizontal = std::hypot(v_ned.x(), v_ned.y());
    return rad2deg(std::atan2(-v_ned.z(), horizontal));
}

/// Inertial flight-path angle of the state, deg.
inline double flight_path_angle_deg(const AircraftState& s) {
    return flight_path_angle_deg(body_to_ned(s) * s.body_velocity());
}

/// Aerodynamic plus propulsive loads for the current state.
inline ForcesMoments total_loads(const AircraftState& s, const SurfaceDeflections& surfaces,
                                 double thrust_lb, const BodyWind& wind, const AircraftParams& params) {
    const AirData ad = air_data(s, wind, params.air_density);
    const AeroRates rates = coefficient_rates(s.p, s.q + wind.pitch_rate_gust, s.r, ad.airspeed, params);
    const AeroAngles angles{ad.alpha, ad.beta};
    const CoeffSet c = aero_coefficients(angles, rates, surfaces, params.aero);
    ForcesMoments fm = forces_moments(c, ad.qbar, params, angles);
    fm.force.x() += thrust_lb;
    return fm;
}

/// Rigid-body state derivative under the given body-axis loads.
/// Diagonal inertia, constant mass, gravity resolved through the Euler angles.
inline AircraftState rigid_body_derivative(const AircraftState& s, const ForcesMoments& loads,
                                           const AircraftParams& params) {
    if (std::abs(s.theta) >= deg2rad(kEulerGuardDeg))
        throw EulerSingularity("pitch attitude reached the Euler-angle guard");
    const double g = params.gravity;
    const double m = params.mass;
    const double sf = std::sin(s.phi), cf = std::cos(s.phi);
    const double st = std::sin(s.theta), ct = std::cos(s.theta);

    AircraftState d;
    d.u = s.r * s.v - s.q * s.w + loads.force.x() / m - g * st;
    d.v = s.p * s.w - s.r * s.u + loads.force.y() / m + g * sf * ct;
    d.w = s.q * s.u - s.p * s.v + loads.force.z() / m + g * cf * ct;

    d.p = ((params.Iyy - params.Izz) * s.q * s.r + loads.moment.x()) / params.Ixx;
    d.q = ((params.Izz - params.Ixx) * s.p * s.r + loads.moment.y()) / params.Iyy;
    d.r = ((params.Ixx - params.Iyy) * s.p * s.q + loads.moment.z()) / params.Izz;

    d.phi = s.p + (st / ct) * (s.q * sf + s.r * cf);
    d.theta = s.q * cf - s.r * sf;
    d.psi = (s.q * sf + s.r * cf) / ct;

    const Eigen::Vector3d v_ned = body_to_ned(s) * s.body_velocity();
    d.x_n = v_ned.x();
    d.y_e = v_ned.y();
    d.h = -v_ned.z();
    return d;
}

/// Full closed-form state derivative for held controls and wind.
inline AircraftState state_derivative(const AircraftState& s, const SurfaceDeflections& surfaces,
                                      double thrust_lb, const BodyWind& wind, const AircraftParams& params) {
    return rigid_body_derivative(s, total_loads(s, surfaces, thrust_lb, wind, params), params);
}

/// Classical fourth-order Runge-Kutta step for x' = f(x).
template <class Vec, class F>
Vec rk4_step(F&& f, const Vec& x, double dt) {
    const Vec k1 = f(x);
    const Vec k2 = f(Vec(x + 0.5 * dt * k1));
    const Vec k3 = f(Vec(x + 0.5 * dt * k2));
    const Vec k4 = f(Vec(x + dt * k3));
    return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

inline constexpr double kMaxIntegrationStep = 0.01;

/// Advances the airframe one step with surfaces, thrust and wind held.
inline AircraftState integrate_step(const AircraftState& s, const SurfaceDeflections& surfaces,
                                    double thrust_lb, const BodyWind& wind, const AircraftParams& params,
                                    double dt) {
    if (!(dt > 0.0 && dt <= kMaxIntegrationStep))
        throw std::invalid_argument("integration step must satisfy 0 < dt <= 0.01 s");
    auto f = [&](const AircraftState::Vector& x) -> AircraftState::Vector {
        return state_derivative(AircraftState::from_vector(x), surfaces, thrust_lb, wind, params).to_vector();
    };
    const AircraftState::Vector next = rk4_step(f, s.to_vector(), dt);
    if (!next.allFinite()) throw NonFinite("aircraft state became non-finite");
    return AircraftState::from_vector(next);
}

struct SimClock {
    double dt = 0.005;
    long step_index = 0;

    double t() const { return static_cast<double>(step_index) * dt; }
    void advance() { ++step_index; }
};

/// One row of the trajectory export.
struct TrajectorySample {
    double t = 0.0;
    AircraftState state;
    AirData air;
    double gamma = 0.0;  // deg, inertial
    SurfaceDeflections surfaces;
    SurfaceDeflections demands;
    double throttle = 0.0;
    Eigen::Vector3d wind = Eigen::Vector3d::Zero();
    double pitch_rate_gust = 0.0;
    double glideslope_error = 0.0;  // ft above the reference path
    double lateral_error = 0.0;     // ft right of the centerline
};

inline void write_trajectory_csv(std::ostream& os, const std::vector<TrajectorySample>& rows) {
    os << "t,x_n,y_e,h,u,v,w,p,q,r,phi,theta,psi,V,alpha,beta,gamma,"
          "delta_e,delta_a,delta_r,eta_e,eta_a,eta_r,throttle,u_w,v_w,w_w,q_g,eps_h,y_track\n";
    os.precision(10);
    for (const auto& r : rows) {
        const auto& s = r.state;
        os << r.t << ',' << s.x_n << ',' << s.y_e << ',' << s.h << ',' << s.u << ',' << s.v << ',' << s.w
           << ',' << s.p << ',' << s.q << ',' << s.r << ',' << s.phi << ',' << s.theta << ',' << s.psi << ','
           << r.air.airspeed << ',' << r.air.alpha << ',' << r.air.beta << ',' << r.gamma << ','
           << r.surfaces.elevator << ',' << r.surfaces.aileron << ',' << r.surfaces.rudder << ','
           << r.demands.elevator << ',' << r.demands.aileron << ',' << r.demands.rudder << ','
           << r.throttle << ',' << r.wind.x() << ',' << r.wind.y() << ',' << r.wind.z() << ','
           << r.pitch_rate_gust << ',' << r.glideslope_error << ',' << r.lateral_error << '\n';
    }
}

}  // namespace acl
