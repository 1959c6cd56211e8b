#pragma once

#include <vector>

#include "nearfield/direction.hpp"
#include "nearfield/region.hpp"

namespace nearfield {

/// Nonnegative energy density over emission directions; identically zero
/// outside its support region.
class Radiance {
 public:
  enum class Kind { kUniform, kCosPower, kRadialTable };

  static Radiance uniform(double value, SphericalRegion support);
  /// scale * max(0, <axis, m>)^p on the support.
  static Radiance cos_power(const Direction& axis, double p, double scale,
                            SphericalRegion support);
  /// Piecewise linear in u = <axis, m> over ascending knots `levels`;
  /// clamped at the ends.
  static Radiance radial_table(const Direction& axis, std::vector<double> levels,
                               std::vector<double> values, SphericalRegion support);

  double operator()(const Direction& m) const {
    if (!support_.contains(m)) return 0.0;
    return profile(dot(axis_, m));
  }

  const SphericalRegion& support() const { return support_; }
  Kind kind() const { return kind_; }
  const Direction& axis() const { return axis_; }
  double value() const { return value_; }
  double power() const { return power_; }
  const std::vector<double>& table_levels() const { return levels_; }
  const std::vector<double>& table_values() const { return values_; }

  /// True if the density is invariant under rotations about `axis`
  /// (by structure, not by sampling).
  bool rotationally_symmetric_about(const Direction& axis) const;

  /// Profile value at u = <axis, m>, ignoring the support.
  double profile(double u) const;

  /// Sorted breakpoints of the 1-D profile in u over [-1, 1]: support edges
  /// about this axis and table knots.
  std::vector<double> profile_breakpoints(const Direction& axis) const;

 private:
  Radiance(Kind k, SphericalRegion support) : kind_(k), support_(std::move(support)) {}

  Kind kind_;
  SphericalRegion support_;
  Direction axis_{0.0, 0.0, 1.0};
  double value_ = 0.0;
  double power_ = 0.0;
  std::vector<double> levels_, values_;
};

}  // namespace nearfield
