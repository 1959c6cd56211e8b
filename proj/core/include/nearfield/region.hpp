#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "nearfield/conics.hpp"
#include "nearfield/direction.hpp"

namespace nearfield {

/// Bounding cap {m : <axis, m> > level}; level -1 means the whole sphere.
struct BoundingCap {
  Direction axis{0.0, 0.0, 1.0};
  double level = -1.0;
};

/// Open subset of the unit sphere represented as a predicate tree over
/// primitive sets (caps, bands, wedges, cone shadows, carved cells) combined
/// with union / intersection / difference. Membership is deterministic and
/// total. Primitives are open (strict inequalities); `contains_closure`
/// evaluates the closure, where negated subtrees flip to interiors, so the
/// two modes stay consistent through differences. Closure and literal set
/// differ only on boundaries of measure zero.
///
/// Immutable and cheap to copy (shared tree).
class SphericalRegion {
 public:
  SphericalRegion() : SphericalRegion(empty()) {}

  bool contains(const Direction& m) const { return eval(*node_, m, false); }
  bool contains_closure(const Direction& m) const { return eval(*node_, m, true); }

  static SphericalRegion full();
  static SphericalRegion empty();
  /// {m : <axis, m> > level}, level in (-1, 1).
  static SphericalRegion cap(const Direction& axis, double level);
  /// {m : lower < <axis, m> < upper}.
  static SphericalRegion band(const Direction& axis, double lower, double upper);
  /// Spherical wedge i of k (azimuth window of width 2 pi / k centered at
  /// t + 2 pi i / k). k = 1 is the whole sphere.
  static SphericalRegion wedge(std::uint32_t k, std::uint32_t i, double t);
  /// Projection of the half space {p : <p, normal> > 0}: an open hemisphere.
  static SphericalRegion half_space_proj(const Direction& normal);
  /// Directions shadowed by the cone from `apex` over the patch given as the
  /// graph of `e` over `patch_region`. Exact for apex at the origin (the
  /// shadow is the patch region itself); for other apexes membership is a
  /// deterministic radial survey along the queried direction.
  static SphericalRegion cone_shadow(const Vec3& apex, const Ellipsoid& e,
                                     SphericalRegion patch_region, bool infinite);
  /// Region of the carving step: directions m of the cell base whose point on
  /// `e` lies in the slab (z_lo, z_lo + thickness) and outside the removed
  /// cones of every earlier patch (from the origin and from the shared
  /// target focus).
  static SphericalRegion carved_cell(const Ellipsoid& e, SphericalRegion cell_base,
                                     double z_lo, double thickness,
                                     std::vector<std::pair<Ellipsoid, SphericalRegion>> blockers);

  SphericalRegion unite(SphericalRegion other) const;
  SphericalRegion intersect(SphericalRegion other) const;
  /// This set minus the closure of `other` (minus the interior in closure
  /// mode), matching how the constructions subtract already-used sets.
  static SphericalRegion difference(SphericalRegion a, SphericalRegion b);

  /// Conservative cap covering the region.
  BoundingCap bounding_cap() const;

  /// True if the region is invariant under rotations about `axis` by
  /// structure (caps and bands about the same axis, whole-sphere wedges,
  /// boolean combinations thereof).
  bool rotationally_symmetric_about(const Direction& axis) const;

  /// Appends the <axis, m> levels at which the region's primitives switch
  /// (cap levels, band edges about this axis). Useful as quadrature
  /// breakpoints for rotationally symmetric profiles.
  void collect_axis_levels(const Direction& axis, std::vector<double>& out) const;

  struct Node;

 private:
  explicit SphericalRegion(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static bool eval(const Node& n, const Direction& m, bool closed);
  static BoundingCap bound(const Node& n);

  std::shared_ptr<const Node> node_;

  friend struct RegionSerializer;
};

}  // namespace nearfield
