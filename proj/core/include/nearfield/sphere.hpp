#pragma once

#include <cstdint>
#include <vector>

#include "nearfield/direction.hpp"
#include "nearfield/radiance.hpp"
#include "nearfield/region.hpp"
#include "nearfield/rng.hpp"

namespace nearfield {

/// Monte Carlo estimate with its standard error. `hits` carries the raw
/// indicator count for measure estimates, where additivity over disjoint
/// regions on a shared sample stream is exact at the integer level.
struct Estimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t count = 0;
  std::uint64_t hits = 0;
};

/// Deterministic sample stream on the sphere: sample i is a pure function of
/// (seed, scheme, i), so identical (seed, count, scheme) yield bit-identical
/// streams regardless of how the index range is split across workers.
class SphericalSampler {
 public:
  enum class Scheme { kUniformSphere, kStratifiedCap };

  static SphericalSampler uniform_sphere(std::uint64_t seed, std::uint64_t count);
  /// Stratifies <axis, m> over [level, 1); jittered within each stratum.
  static SphericalSampler stratified_cap(std::uint64_t seed, std::uint64_t count,
                                         const Direction& axis, double level);

  Direction direction(std::uint64_t i) const;
  /// Area of the sampled domain: 4 pi, or 2 pi (1 - level) for a cap.
  double total_area() const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t count() const { return count_; }
  Scheme scheme() const { return scheme_; }
  const Direction& axis() const { return axis_; }
  double level() const { return level_; }

 private:
  SphericalSampler(Scheme s, std::uint64_t seed, std::uint64_t count)
      : scheme_(s), seed_(seed), count_(count) {}

  Scheme scheme_;
  std::uint64_t seed_;
  std::uint64_t count_;
  Direction axis_{0.0, 0.0, 1.0};
  double level_ = -1.0;
  Vec3 frame_u_{1.0, 0.0, 0.0}, frame_v_{0.0, 1.0, 0.0};
};

/// Monte Carlo estimate of the spherical area of `r`. Requires count >= 1000.
Estimate spherical_measure(const SphericalRegion& r, const SphericalSampler& s);

/// Monte Carlo estimate of the g-energy of r (the support clips automatically).
/// Requires count >= 1000.
Estimate radiance_integral(const Radiance& g, const SphericalRegion& r,
                           const SphericalSampler& s);

/// Deterministic quadrature of the g-energy of the band
/// {lower < <axis, m> < upper} for g rotationally symmetric about `axis`.
/// Composite Simpson with 4096 base points split at profile breakpoints.
double band_mass_quadrature(const Radiance& g, const Direction& axis, double lower,
                            double upper);

/// Smallest cap about `axis` holding the prescribed g-mass: returns the level
/// zeta in [c_outer, 1) with mass(Cap(axis, zeta)) = mass, found by bisection
/// on the deterministic 1-D mass profile. Requires g rotationally symmetric
/// about the axis. Zero mass returns the empty-up-to-tolerance level 1 - 1e-12.
double cap_level_for_mass(const Radiance& g, const Direction& axis, double mass,
                          double c_outer);

/// Draws exactly n directions inside `region` by rejection from its bounding
/// cap; deterministic for fixed (seed, stream). Throws InvalidParameterError
/// if the region looks empty at this resolution.
std::vector<Direction> sample_region(const SphericalRegion& region, std::size_t n,
                                     std::uint64_t seed, std::uint64_t stream);

}  // namespace nearfield
