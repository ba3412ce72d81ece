#include "swarmloc/geometry.hpp"

namespace swarmloc {

double euclidean_distance(const Vec3& p, const Vec3& q) {
  return (p - q).norm();
}

double euclidean_distance(const Vec2& p, const Vec2& q) {
  return (p - q).norm();
}

double wrap_angle(double theta) {
  double w = std::remainder(theta, 2.0 * kPi);
  if (w >= kPi) w -= 2.0 * kPi;  // remainder can return exactly +pi
  return w;
}

double angular_difference(double a, double b) {
  return wrap_angle(a - b);
}

Vec2 project_to_plane(const Vec3& p) {
  return {p.x, p.y};
}

}  // namespace swarmloc
