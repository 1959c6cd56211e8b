#include "nearfield/conics.hpp"

#include <algorithm>
#include <cmath>

#include "nearfield/errors.hpp"

namespace nearfield {

double eccentricity(const Vec3& x, double d) {
  const double r = norm(x);
  if (!(r > 0.0)) throw InvalidFocusError("ellipsoid focus must differ from the origin");
  if (!(d > 0.0)) throw InvalidParameterError("focal parameter must be positive");
  const double t = d / r;
  return std::sqrt(1.0 + t * t) - t;
}

Ellipsoid::Ellipsoid(const Vec3& focus, double d)
    : focus_(focus),
      d_(d),
      eps_(nearfield::eccentricity(focus, d)),
      a_(d / (1.0 - eps_ * eps_)),
      axis_(project(focus)) {
  // A focal parameter this small is numerically a segment, which none of the
  // constructions use.
  if (d < 1e-12 * norm(focus)) {
    throw InvalidParameterError("degenerate ellipsoid: d < 1e-12 |x|");
  }
}

Direction Ellipsoid::surface_normal(const Direction& m) const {
  const Vec3 p = point(m);
  const Vec3 from_focus = p - focus_;
  return project(m.vec() + from_focus / norm(from_focus));
}

std::vector<double> Ellipsoid::ray_hit(const Vec3& origin, const Direction& dir) const {
  // Squaring |p| + |p-x| = 2a twice yields a quadratic in t along
  // p = origin + t dir, with the linear factor L(t) = alpha + beta t equal to
  // |p| on true roots; L >= 0 filters the extraneous branch. beta is bounded
  // by the eccentricity, so the leading coefficient 1 - beta^2 never vanishes.
  const double x2 = norm_squared(focus_);
  const double alpha = a_ - x2 / (4.0 * a_) + dot(origin, focus_) / (2.0 * a_);
  const double beta = dot(dir, focus_) / (2.0 * a_);
  const double qa = 1.0 - beta * beta;
  const double qb = dot(origin, dir.vec()) - alpha * beta;
  const double qc = norm_squared(origin) - alpha * alpha;

  const double disc = qb * qb - qa * qc;
  if (disc < 0.0) return {};
  const double sq = std::sqrt(disc);
  // Citardauq form for the smaller-magnitude root keeps precision.
  double roots[2];
  if (qb >= 0.0) {
    roots[0] = (-qb - sq) / qa;
    roots[1] = qc / (qa * roots[0]);
  } else {
    roots[1] = (-qb + sq) / qa;
    roots[0] = qc / (qa * roots[1]);
  }
  if (roots[0] > roots[1]) std::swap(roots[0], roots[1]);

  std::vector<double> hits;
  for (double t : roots) {
    if (!(t > 0.0)) continue;
    if (alpha + beta * t < 0.0) continue;
    // One Newton step on the focal-sum function polishes the squaring error.
    const Vec3 p = origin + dir.vec() * t;
    const double r0 = norm(p);
    const double r1 = distance(p, focus_);
    if (r0 > 0.0 && r1 > 0.0) {
      const double f = r0 + r1 - 2.0 * a_;
      const double df = dot(dir.vec(), p / r0 + (p - focus_) / r1);
      if (std::abs(df) > 1e-12) {
        const double t2 = t - f / df;
        if (t2 > 0.0) t = t2;
      }
    }
    if (hits.empty() || std::abs(hits.back() - t) > 1e-12 * (1.0 + std::abs(t))) {
      hits.push_back(t);
    }
  }
  return hits;
}

}  // namespace nearfield
