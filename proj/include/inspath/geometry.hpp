#pragma once

#include <cmath>

namespace inspath {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Point3 operator+(const Point3& a, const Point3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Point3 operator-(const Point3& a, const Point3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Point3 operator*(const Point3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
    friend bool operator==(const Point3& a, const Point3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

inline double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Point3& a) { return std::sqrt(dot(a, a)); }

inline double distance(const Point3& a, const Point3& b) { return norm(a - b); }

inline Point3 normalized(const Point3& a) {
    const double len = norm(a);
    return len > 0.0 ? a * (1.0 / len) : Point3{0.0, 0.0, 0.0};
}

inline bool finite(const Point3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// Angle between two unit vectors, clamped against rounding.
inline double angle_between(const Point3& a, const Point3& b) {
    double c = dot(a, b);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

}  // namespace inspath
