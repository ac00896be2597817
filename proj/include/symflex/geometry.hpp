#pragma once

#include <cmath>

namespace symflex {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return { x + o.x, y + o.y }; }
    constexpr Vec2 operator-(Vec2 o) const { return { x - o.x, y - o.y }; }
    constexpr Vec2 operator*(double s) const { return { x * s, y * s }; }
    constexpr Vec2& operator+=(Vec2 o)
    {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr Vec2& operator-=(Vec2 o)
    {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    constexpr bool operator==(const Vec2&) const = default;
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// The planar mirror through the y-axis, diag(-1, 1).
constexpr Vec2 mirror(Vec2 v) { return { -v.x, v.y }; }

/// Counter-clockwise rotation by `angle` radians.
inline Vec2 rotate(double angle, Vec2 v)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return { c * v.x - s * v.y, s * v.x + c * v.y };
}

/// Signed angle from `a` to `b` in (-pi, pi].
inline double signed_angle(Vec2 a, Vec2 b) { return std::atan2(cross(a, b), dot(a, b)); }

inline double wrap_angle(double a)
{
    constexpr double two_pi = 2.0 * M_PI;
    a = std::fmod(a + M_PI, two_pi);
    if (a < 0.0) {
        a += two_pi;
    }
    return a - M_PI;
}

} // namespace symflex
