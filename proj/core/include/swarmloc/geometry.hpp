#pragma once

#include <cmath>

namespace swarmloc {

inline constexpr double kPi = 3.14159265358979323846;

/// Planar position, meters. +x is north.
struct Vec2 {
  double x{0.0};
  double y{0.0};

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double norm() const { return std::hypot(x, y); }
};

/// 3D position, meters. +x is north, z is the depth axis.
struct Vec3 {
  double x{0.0};
  double y{0.0};
  double z{0.0};

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

using Position2 = Vec2;
using Position3 = Vec3;

double euclidean_distance(const Vec3& p, const Vec3& q);
double euclidean_distance(const Vec2& p, const Vec2& q);

/// Canonical angle in [-pi, pi); pi maps to -pi. Counterclockwise from +x.
double wrap_angle(double theta);

/// Wrapped difference a - b in [-pi, pi).
double angular_difference(double a, double b);

/// Drops z; the depth observation carries it separately.
Vec2 project_to_plane(const Vec3& p);

inline Vec3 with_depth(const Vec2& p, double z) { return {p.x, p.y, z}; }

inline double kmh_to_mps(double kmh) { return kmh / 3.6; }

/// Displacements shorter than this have no usable direction.
inline constexpr double kStationaryDisplacement = 0.01;

}  // namespace swarmloc
