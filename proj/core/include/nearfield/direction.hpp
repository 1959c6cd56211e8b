#pragma once

#include <cassert>
#include <cmath>

#include "nearfield/errors.hpp"
#include "nearfield/vec3.hpp"

namespace nearfield {

/// Unit vector on the sphere. All radial functions take their argument here.
class Direction {
 public:
  /// `v` must already be unit length to 1e-12; use project() to normalize.
  explicit Direction(const Vec3& v) : v_(v) {
    assert(std::abs(norm_squared(v) - 1.0) < 1e-11);
  }
  Direction(double x, double y, double z) : Direction(Vec3{x, y, z}) {}

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  /// Azimuth in (-pi, pi].
  double azimuth() const { return std::atan2(v_.y, v_.x); }

 private:
  Vec3 v_;
};

inline double dot(const Direction& a, const Direction& b) { return dot(a.vec(), b.vec()); }
inline double dot(const Direction& a, const Vec3& b) { return dot(a.vec(), b); }
inline double dot(const Vec3& a, const Direction& b) { return dot(a, b.vec()); }

/// Radial projection p/|p| onto the sphere. Throws ZeroVectorError if |p| < 1e-300.
inline Direction project(const Vec3& p) {
  const double n = std::hypot(p.x, p.y, p.z);
  if (n < 1e-300) throw ZeroVectorError{};
  return Direction(p / n);
}

inline const Direction& z_axis() {
  static const Direction d{0.0, 0.0, 1.0};
  return d;
}

/// Any unit vector orthogonal to `a`.
inline Direction orthogonal_to(const Direction& a) {
  const Vec3 v = std::abs(a.x()) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  return project(cross(a.vec(), v));
}

}  // namespace nearfield
