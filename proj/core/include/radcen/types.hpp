#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace radcen {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
    constexpr Vec2& operator/=(double s) { x /= s; y /= s; return *this; }
};

// Points and vectors share a representation.
using Point = Vec2;

constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
constexpr Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
constexpr Vec2 operator/(Vec2 a, double s) { return a /= s; }

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }
inline double distance(const Vec2& a, const Vec2& b) { return norm(a - b); }
inline Vec2 unit_vector(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline Vec2 perp(const Vec2& a) { return {-a.y, a.x}; }
inline Vec2 rotate(const Vec2& a, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

enum class ErrorCode {
    InvalidBody,
    BoundaryPoint,
    NotStarShaped,
    NotInterior,
    ToleranceNotMet,
    NoInteriorSeed,
    NonConvergence,
    TheoremViolation,
    ConstructionFailed,
    NonPositiveValue,
    ContinuumContact,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidBody: return "InvalidBody";
        case ErrorCode::BoundaryPoint: return "BoundaryPoint";
        case ErrorCode::NotStarShaped: return "NotStarShaped";
        case ErrorCode::NotInterior: return "NotInterior";
        case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
        case ErrorCode::NoInteriorSeed: return "NoInteriorSeed";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::TheoremViolation: return "TheoremViolation";
        case ErrorCode::ConstructionFailed: return "ConstructionFailed";
        case ErrorCode::NonPositiveValue: return "NonPositiveValue";
        case ErrorCode::ContinuumContact: return "ContinuumContact";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Domain error carrying a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace radcen
