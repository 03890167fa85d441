#pragma once

// Shared constants, unit conversions and the error hierarchy.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace acl {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDegToRad = kPi / 180.0;
inline constexpr double kRadToDeg = 180.0 / kPi;
inline constexpr double kKnotToFps = 1.68781;
inline constexpr double kStandardGravity = 32.174;        // ft/s^2
inline constexpr double kSeaLevelDensity = 0.0023769;     // slug/ft^3

constexpr double deg2rad(double deg) { return deg * kDegToRad; }
constexpr double rad2deg(double rad) { return rad * kRadToDeg; }
constexpr double knots_to_fps(double kn) { return kn * kKnotToFps; }

/// Base of every error raised by the simulator.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ACL_DEFINE_ERROR(Name)                \
    class Name : public Error {               \
    public:                                   \
        using Error::Error;                   \
    }

ACL_DEFINE_ERROR(AlphaOutOfRange);
ACL_DEFINE_ERROR(EulerSingularity);
ACL_DEFINE_ERROR(NonFinite);
ACL_DEFINE_ERROR(ThrottleGuard);
ACL_DEFINE_ERROR(AltitudeBelowRoughness);
ACL_DEFINE_ERROR(FormatError);
ACL_DEFINE_ERROR(NonUniformSampling);
ACL_DEFINE_ERROR(FitDiverged);
ACL_DEFINE_ERROR(NoConvergence);
ACL_DEFINE_ERROR(SchemaError);
ACL_DEFINE_ERROR(RangeError);
ACL_DEFINE_ERROR(MissingData);
ACL_DEFINE_ERROR(IoError);

#undef ACL_DEFINE_ERROR

}  // namespace acl
