#pragma once

#include <vector>

#include "nearfield/direction.hpp"
#include "nearfield/vec3.hpp"

namespace nearfield {

/// Eccentricity of the ellipsoid of revolution with foci at the origin and x
/// and focal parameter d. Always in (0, 1) for d > 0.
double eccentricity(const Vec3& x, double d);

/// Ellipsoid of revolution with one focus at the origin, the other at `focus`,
/// and focal parameter d (the polar radius perpendicular to the axis).
/// Rays emitted at the origin reflect through the second focus.
class Ellipsoid {
 public:
  Ellipsoid(const Vec3& focus, double d);

  const Vec3& focus() const { return focus_; }
  double focal_parameter() const { return d_; }
  double eccentricity() const { return eps_; }
  /// Unit axis direction from the origin toward the second focus.
  const Direction& axis() const { return axis_; }
  /// Semi major axis a; the focal sum |p| + |p - focus| equals 2a on the surface.
  double semi_major() const { return a_; }

  /// Polar radius from the origin: d / (1 - eps <m, k_x>). Always positive.
  double polar_radius(const Direction& m) const {
    return d_ / (1.0 - eps_ * dot(m, axis_));
  }

  /// Surface point in direction m.
  Vec3 point(const Direction& m) const { return m.vec() * polar_radius(m); }

  /// Polar radius as seen from the second focus (which is interior): distance
  /// from `focus` to the surface along unit direction u.
  double radius_from_focus(const Direction& u) const {
    return d_ / (1.0 + eps_ * dot(u, axis_));
  }

  /// Outward unit normal at the surface point in direction m, oriented with
  /// <n, m> > 0. Computed as the normalized gradient of |p| + |p - focus|.
  Direction surface_normal(const Direction& m) const;

  /// |p| + |p - focus| - 2a; zero on the surface, negative inside.
  double focal_sum_excess(const Vec3& p) const {
    return norm(p) + distance(p, focus_) - 2.0 * a_;
  }

  /// Forward intersection parameters (ascending, t > 0) of the ray
  /// origin + t dir with the surface. 0, 1 or 2 entries.
  std::vector<double> ray_hit(const Vec3& origin, const Direction& dir) const;

 private:
  Vec3 focus_;
  double d_;
  double eps_;
  double a_;
  Direction axis_;
};

/// Reflection law: y = m - 2 <m, n> n. Both arguments unit; result unit.
inline Direction reflect_direction(const Direction& m, const Direction& n) {
  const double c = dot(m, n);
  return Direction(m.vec() - n.vec() * (2.0 * c));
}

}  // namespace nearfield
