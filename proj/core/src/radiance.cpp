#include "nearfield/radiance.hpp"

#include <algorithm>
#include <cmath>

#include "nearfield/errors.hpp"

namespace nearfield {

Radiance Radiance::uniform(double value, SphericalRegion support) {
  if (!(value >= 0.0)) throw InvalidParameterError("radiance must be nonnegative");
  Radiance g(Kind::kUniform, std::move(support));
  g.value_ = value;
  return g;
}

Radiance Radiance::cos_power(const Direction& axis, double p, double scale,
                             SphericalRegion support) {
  if (!(scale >= 0.0)) throw InvalidParameterError("radiance scale must be nonnegative");
  if (!(p >= 0.0)) throw InvalidParameterError("cosine power must be nonnegative");
  Radiance g(Kind::kCosPower, std::move(support));
  g.axis_ = axis;
  g.power_ = p;
  g.value_ = scale;
  return g;
}

Radiance Radiance::radial_table(const Direction& axis, std::vector<double> levels,
                                std::vector<double> values, SphericalRegion support) {
  if (levels.size() < 2 || levels.size() != values.size()) {
    throw InvalidParameterError("radial table needs matching levels/values, at least two");
  }
  if (!std::is_sorted(levels.begin(), levels.end())) {
    throw InvalidParameterError("radial table levels must be ascending");
  }
  for (double v : values) {
    if (!(v >= 0.0)) throw InvalidParameterError("radiance must be nonnegative");
  }
  Radiance g(Kind::kRadialTable, std::move(support));
  g.axis_ = axis;
  g.levels_ = std::move(levels);
  g.values_ = std::move(values);
  return g;
}

double Radiance::profile(double u) const {
  switch (kind_) {
    case Kind::kUniform:
      return value_;
    case Kind::kCosPower:
      return u <= 0.0 ? 0.0 : value_ * std::pow(u, power_);
    case Kind::kRadialTable: {
      if (u <= levels_.front()) return values_.front();
      if (u >= levels_.back()) return values_.back();
      const auto it = std::upper_bound(levels_.begin(), levels_.end(), u);
      const std::size_t i = static_cast<std::size_t>(it - levels_.begin());
      const double t = (u - levels_[i - 1]) / (levels_[i] - levels_[i - 1]);
      return values_[i - 1] + t * (values_[i] - values_[i - 1]);
    }
  }
  return 0.0;
}

bool Radiance::rotationally_symmetric_about(const Direction& axis) const {
  if (!support_.rotationally_symmetric_about(axis)) return false;
  if (kind_ == Kind::kUniform) return true;
  return std::abs(dot(axis_, axis) - 1.0) < 1e-12;
}

std::vector<double> Radiance::profile_breakpoints(const Direction& axis) const {
  std::vector<double> pts{-1.0, 1.0};
  support_.collect_axis_levels(axis, pts);
  if (kind_ == Kind::kRadialTable) {
    pts.insert(pts.end(), levels_.begin(), levels_.end());
  }
  if (kind_ == Kind::kCosPower) pts.push_back(0.0);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-15; }),
            pts.end());
  // Clamp to [-1, 1].
  std::vector<double> out;
  for (double p : pts) {
    if (p >= -1.0 && p <= 1.0) out.push_back(p);
  }
  return out;
}

}  // namespace nearfield
