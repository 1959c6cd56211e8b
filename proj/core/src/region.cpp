#include "nearfield/region.hpp"

#include <cmath>

#include "nearfield/errors.hpp"

namespace nearfield {

struct SphericalRegion::Node {
  enum Kind {
    kFull,
    kEmpty,
    kCap,
    kBand,
    kWedge,
    kHalfSpace,
    kConeShadow,
    kCarvedCell,
    kUnion,
    kIntersection,
    kDifference,
  };

  Kind kind = kEmpty;

  Direction axis{0.0, 0.0, 1.0};
  double lo = 0.0, hi = 0.0;

  std::uint32_t wedge_k = 0, wedge_i = 0;
  double wedge_t = 0.0;

  // Cone shadow / carved cell payload.
  std::vector<Ellipsoid> ellipsoids;  // shadow: [patch]; carved: [own, blockers...]
  std::vector<std::shared_ptr<const Node>> regions;  // shadow: [patch]; carved: [base, blockers...]
  Vec3 apex;
  bool infinite = true;
  double z_lo = 0.0, thickness = 0.0;

  std::shared_ptr<const Node> a, b;
};

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

using Node = SphericalRegion::Node;

std::shared_ptr<const Node> make_node(Node n) {
  return std::make_shared<const Node>(std::move(n));
}

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a <= -kTwoPi / 2.0) a += kTwoPi;
  if (a > kTwoPi / 2.0) a -= kTwoPi;
  return a;
}

bool eval_node(const Node& n, const Direction& m, bool closed);

bool wedge_contains(const Node& n, const Direction& m, bool closed) {
  if (n.wedge_k == 1) return true;
  const double half = kTwoPi / 2.0 / static_cast<double>(n.wedge_k);
  const double center = n.wedge_t + 2.0 * half * static_cast<double>(n.wedge_i);
  const double delta = wrap_angle(m.azimuth() - center);
  return closed ? std::abs(delta) <= half : std::abs(delta) < half;
}

// p lies in the cone from `apex` over the graph of `e` on `region` iff the ray
// from the apex through p meets that patch; for finite cones the hit must be
// at or beyond p.
bool cone_point_test(const Vec3& apex, const Ellipsoid& e, const Node& region, bool infinite,
                     const Vec3& p, bool closed_region) {
  const Vec3 rel = p - apex;
  const double sp = norm(rel);
  if (sp < 1e-300) return true;  // the apex itself
  const Direction u = project(rel);
  for (double t : e.ray_hit(apex, u)) {
    if (!infinite && t < sp - 1e-9) continue;
    const Vec3 q = apex + u.vec() * t;
    if (norm(q) < 1e-300) continue;
    if (eval_node(region, project(q), closed_region)) return true;
  }
  return false;
}

bool cone_shadow_contains(const Node& n, const Direction& m, bool closed) {
  const Ellipsoid& e = n.ellipsoids[0];
  const Node& patch = *n.regions[0];
  if (norm_squared(n.apex) < 1e-300) {
    // Cone from the origin: the shadow is the patch region itself.
    return eval_node(patch, m, closed);
  }
  // Radial survey: does some point of the ray from the origin along m lie in
  // the cone? Log-spaced scan plus the direction limit at infinity.
  const double scale = norm(n.apex) + 2.0 * e.semi_major();
  constexpr int kSteps = 96;
  for (int i = 0; i <= kSteps; ++i) {
    const double s = scale * std::exp2(-12.0 + 24.0 * i / kSteps);
    if (cone_point_test(n.apex, e, patch, n.infinite, m.vec() * s, closed)) return true;
  }
  if (n.infinite) {
    // s -> infinity: the ray direction from the apex tends to m itself.
    for (double t : e.ray_hit(n.apex, m)) {
      const Vec3 q = n.apex + m.vec() * t;
      if (norm(q) > 1e-300 && eval_node(patch, project(q), closed)) return true;
    }
  }
  return false;
}

bool carved_cell_contains(const Node& n, const Direction& m, bool closed) {
  if (!eval_node(*n.regions[0], m, closed)) return false;
  const Ellipsoid& own = n.ellipsoids[0];
  const double psi = own.polar_radius(m);
  const double z = psi * m.z();
  const bool in_slab = closed ? (z >= n.z_lo && z <= n.z_lo + n.thickness)
                              : (z > n.z_lo && z < n.z_lo + n.thickness);
  if (!in_slab) return false;
  // Removed cones of earlier patches; as excluded sets they evaluate in the
  // flipped mode.
  const bool ex_mode = !closed;
  const Vec3 p = m.vec() * psi;
  const Vec3& x = own.focus();
  for (std::size_t j = 1; j < n.ellipsoids.size(); ++j) {
    const Node& br = *n.regions[j];
    // Cone from the origin over patch j is purely directional.
    if (eval_node(br, m, ex_mode)) return false;
    // Cone from the shared focus: the ray from x through p exits the blocker
    // ellipsoid exactly once (x is interior), at a point with a closed-form
    // radius; test the exit direction against the blocker region.
    const Vec3 rel = p - x;
    if (norm_squared(rel) < 1e-300) return false;
    const Direction u = project(rel);
    const double rq = n.ellipsoids[j].radius_from_focus(u);
    const Vec3 q = x + u.vec() * rq;
    if (norm_squared(q) < 1e-300) continue;
    if (eval_node(br, project(q), ex_mode)) return false;
  }
  return true;
}

bool eval_node(const Node& n, const Direction& m, bool closed) {
  switch (n.kind) {
    case Node::kFull:
      return true;
    case Node::kEmpty:
      return false;
    case Node::kCap: {
      const double c = dot(n.axis, m);
      return closed ? c >= n.lo : c > n.lo;
    }
    case Node::kBand: {
      const double c = dot(n.axis, m);
      return closed ? (c >= n.lo && c <= n.hi) : (c > n.lo && c < n.hi);
    }
    case Node::kWedge:
      return wedge_contains(n, m, closed);
    case Node::kHalfSpace: {
      const double c = dot(n.axis, m);
      return closed ? c >= 0.0 : c > 0.0;
    }
    case Node::kConeShadow:
      return cone_shadow_contains(n, m, closed);
    case Node::kCarvedCell:
      return carved_cell_contains(n, m, closed);
    case Node::kUnion:
      return eval_node(*n.a, m, closed) || eval_node(*n.b, m, closed);
    case Node::kIntersection:
      return eval_node(*n.a, m, closed) && eval_node(*n.b, m, closed);
    case Node::kDifference:
      return eval_node(*n.a, m, closed) && !eval_node(*n.b, m, !closed);
  }
  return false;
}

}  // namespace

bool SphericalRegion::eval(const Node& n, const Direction& m, bool closed) {
  return eval_node(n, m, closed);
}

SphericalRegion SphericalRegion::full() {
  Node n;
  n.kind = Node::kFull;
  return SphericalRegion(make_node(std::move(n)));
}

SphericalRegion SphericalRegion::empty() {
  Node n;
  n.kind = Node::kEmpty;
  return SphericalRegion(make_node(std::move(n)));
}

SphericalRegion SphericalRegion::cap(const Direction& axis, double level) {
  if (!(level > -1.0 && level < 1.0)) {
    throw InvalidParameterError("cap level must lie in (-1, 1)");
  }
  Node n;
  n.kind = Node::kCap;
  n.axis = axis;
  n.lo = level;
  return SphericalRegion(make_node(std::move(n)));
}

SphericalRegion SphericalRegion::band(const Direction& axis, double lower, double upper) {
  if (!(lower < upper)) throw InvalidParameterError("band requires lower < upper");
  Node n;
  n.kind = Node::kBand;
  n.axis = axis;
  n.lo = lower;
  n.hi = upper;
  return SphericalRegion(make_node(std::move(n)));
}

SphericalRegion SphericalRegion::wedge(std::uint32_t k, std::uint32_t i, double t) {
  if (k == 0) throw InvalidParameterError("wedge count k must be positive");
  if (i >= k) throw InvalidParameterError("wedge index must lie in [0, k)");
  Node n;
  n.kind = Node::kWedge;
  n.wedge_k = k;
  n.wedge_i = i;
  n.wedge_t = t;
  return SphericalRegion(make_node(std::move(n)));
}

SphericalRegion SphericalRegion::half_space_proj(const Direction& normal) {
  Node n;
  n.kind = Node::kHalfSpace;
  n.axis = normal;
  return SphericalRegion(make_node(std::move(n)));
}

SphericalRegion SphericalRegion::cone_shadow(const Vec3& apex, const Ellipsoid& e,
                                             SphericalRegion patch_region, bool infinite) {
  Node n;
  n.kind = Node::kConeShadow;
  n.apex = apex;
  n.infinite = infinite;
  n.ellipsoids.push_back(e);
  n.regions.push_back(patch_region.node_);
  return SphericalRegion(make_node(std::move(n)));
}

SphericalRegion SphericalRegion::carved_cell(
    const Ellipsoid& e, SphericalRegion cell_base, double z_lo, double thickness,
    std::vector<std::pair<Ellipsoid, SphericalRegion>> blockers) {
  if (!(thickness > 0.0)) throw InvalidParameterError("carved cell needs positive thickness");
  Node n;
  n.kind = Node::kCarvedCell;
  n.z_lo = z_lo;
  n.thickness = thickness;
  n.ellipsoids.push_back(e);
  n.regions.push_back(cell_base.node_);
  for (auto& [be, br] : blockers) {
    n.ellipsoids.push_back(be);
    n.regions.push_back(br.node_);
  }
  return SphericalRegion(make_node(std::move(n)));
}

SphericalRegion SphericalRegion::unite(SphericalRegion other) const {
  Node n;
  n.kind = Node::kUnion;
  n.a = node_;
  n.b = other.node_;
  return SphericalRegion(make_node(std::move(n)));
}

SphericalRegion SphericalRegion::intersect(SphericalRegion other) const {
  Node n;
  n.kind = Node::kIntersection;
  n.a = node_;
  n.b = other.node_;
  return SphericalRegion(make_node(std::move(n)));
}

SphericalRegion SphericalRegion::difference(SphericalRegion a, SphericalRegion b) {
  Node n;
  n.kind = Node::kDifference;
  n.a = a.node_;
  n.b = b.node_;
  return SphericalRegion(make_node(std::move(n)));
}

BoundingCap SphericalRegion::bound(const Node& n) {
  switch (n.kind) {
    case Node::kEmpty:
      return {Direction(0.0, 0.0, 1.0), 1.0 - 1e-12};
    case Node::kCap:
      return {n.axis, n.lo};
    case Node::kBand:
      return {n.axis, n.lo};
    case Node::kHalfSpace:
      return {n.axis, 0.0};
    case Node::kIntersection: {
      const BoundingCap ba = bound(*n.a);
      const BoundingCap bb = bound(*n.b);
      return ba.level >= bb.level ? ba : bb;
    }
    case Node::kDifference:
      return bound(*n.a);
    case Node::kUnion: {
      const BoundingCap ba = bound(*n.a);
      const BoundingCap bb = bound(*n.b);
      if (std::abs(dot(ba.axis, bb.axis) - 1.0) < 1e-12) {
        return {ba.axis, std::min(ba.level, bb.level)};
      }
      return {};
    }
    case Node::kCarvedCell:
      return bound(*n.regions[0]);
    default:
      return {};
  }
}

BoundingCap SphericalRegion::bounding_cap() const { return bound(*node_); }

namespace {

bool axis_aligned(const Direction& a, const Direction& b) {
  return std::abs(dot(a, b) - 1.0) < 1e-12;
}

bool node_rot_sym(const Node& n, const Direction& axis) {
  switch (n.kind) {
    case Node::kFull:
    case Node::kEmpty:
      return true;
    case Node::kCap:
    case Node::kBand:
    case Node::kHalfSpace:
      return axis_aligned(n.axis, axis);
    case Node::kWedge:
      return n.wedge_k == 1;
    case Node::kUnion:
    case Node::kIntersection:
    case Node::kDifference:
      return node_rot_sym(*n.a, axis) && node_rot_sym(*n.b, axis);
    default:
      return false;
  }
}

void node_axis_levels(const Node& n, const Direction& axis, std::vector<double>& out) {
  switch (n.kind) {
    case Node::kCap:
      if (axis_aligned(n.axis, axis)) out.push_back(n.lo);
      return;
    case Node::kBand:
      if (axis_aligned(n.axis, axis)) {
        out.push_back(n.lo);
        out.push_back(n.hi);
      }
      return;
    case Node::kHalfSpace:
      if (axis_aligned(n.axis, axis)) out.push_back(0.0);
      return;
    case Node::kUnion:
    case Node::kIntersection:
    case Node::kDifference:
      node_axis_levels(*n.a, axis, out);
      node_axis_levels(*n.b, axis, out);
      return;
    default:
      return;
  }
}

}  // namespace

bool SphericalRegion::rotationally_symmetric_about(const Direction& axis) const {
  return node_rot_sym(*node_, axis);
}

void SphericalRegion::collect_axis_levels(const Direction& axis, std::vector<double>& out) const {
  node_axis_levels(*node_, axis, out);
}

}  // namespace nearfield
