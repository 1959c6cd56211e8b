#include "nearfield/sphere.hpp"

#include <algorithm>
#include <cmath>

#include "nearfield/errors.hpp"
#include "nearfield/parallel.hpp"

namespace nearfield {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kFourPi = 4.0 * kPi;

void require_count(const SphericalSampler& s) {
  if (s.count() < 1000) {
    throw InvalidParameterError("Monte Carlo estimates require at least 1000 samples");
  }
}
}  // namespace

SphericalSampler SphericalSampler::uniform_sphere(std::uint64_t seed, std::uint64_t count) {
  return SphericalSampler(Scheme::kUniformSphere, seed, count);
}

SphericalSampler SphericalSampler::stratified_cap(std::uint64_t seed, std::uint64_t count,
                                                  const Direction& axis, double level) {
  if (!(level > -1.0 && level < 1.0)) {
    throw InvalidParameterError("stratified cap level must lie in (-1, 1)");
  }
  SphericalSampler s(Scheme::kStratifiedCap, seed, count);
  s.axis_ = axis;
  s.level_ = level;
  const Direction u = orthogonal_to(axis);
  s.frame_u_ = u.vec();
  s.frame_v_ = cross(axis.vec(), u.vec());
  return s;
}

Direction SphericalSampler::direction(std::uint64_t i) const {
  const double u1 = rng_uniform(seed_, streams::sampler_u, i);
  const double u2 = rng_uniform(seed_, streams::sampler_v, i);
  if (scheme_ == Scheme::kUniformSphere) {
    const double z = 1.0 - 2.0 * u1;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * kPi * u2;
    return Direction(r * std::cos(phi), r * std::sin(phi), z);
  }
  // Jittered stratification of <axis, m> over [level, 1).
  const double frac = (static_cast<double>(i) + u1) / static_cast<double>(count_);
  const double z = 1.0 - (1.0 - level_) * frac;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = 2.0 * kPi * u2;
  const Vec3 m = axis_.vec() * z + frame_u_ * (r * std::cos(phi)) + frame_v_ * (r * std::sin(phi));
  return project(m);
}

double SphericalSampler::total_area() const {
  return scheme_ == Scheme::kUniformSphere ? kFourPi : 2.0 * kPi * (1.0 - level_);
}

Estimate spherical_measure(const SphericalRegion& r, const SphericalSampler& s) {
  require_count(s);
  const std::uint64_t n = s.count();
  const std::size_t nblocks = (n + kTallyBlock - 1) / kTallyBlock;
  std::vector<std::uint64_t> block_hits(nblocks, 0);
  parallel_blocks(n, kTallyBlock, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    std::uint64_t h = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      if (r.contains(s.direction(i))) ++h;
    }
    block_hits[b] = h;
  });
  std::uint64_t hits = 0;
  for (std::uint64_t h : block_hits) hits += h;

  const double area = s.total_area();
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  Estimate e;
  e.count = n;
  e.hits = hits;
  e.mean = area * p;
  e.standard_error = area * std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n - 1));
  return e;
}

Estimate radiance_integral(const Radiance& g, const SphericalRegion& r,
                           const SphericalSampler& s) {
  require_count(s);
  const std::uint64_t n = s.count();
  const std::size_t nblocks = (n + kTallyBlock - 1) / kTallyBlock;
  std::vector<double> sums(nblocks, 0.0), sqs(nblocks, 0.0);
  std::vector<std::uint64_t> block_hits(nblocks, 0);
  parallel_blocks(n, kTallyBlock, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    double sum = 0.0, sq = 0.0;
    std::uint64_t h = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      const Direction m = s.direction(i);
      if (!r.contains(m)) continue;
      const double v = g(m);
      if (v <= 0.0) continue;
      sum += v;
      sq += v * v;
      ++h;
    }
    sums[b] = sum;
    sqs[b] = sq;
    block_hits[b] = h;
  });
  const double sum = pairwise_sum(sums);
  const double sq = pairwise_sum(sqs);
  std::uint64_t hits = 0;
  for (std::uint64_t h : block_hits) hits += h;

  const double area = s.total_area();
  const double nn = static_cast<double>(n);
  Estimate e;
  e.count = n;
  e.hits = hits;
  e.mean = area * sum / nn;
  const double var = std::max(0.0, (sq - sum * sum / nn) / (nn - 1.0));
  e.standard_error = area * std::sqrt(var / nn);
  return e;
}

namespace {

// Composite Simpson over [a, b] with an even subinterval count.
double simpson(const Radiance& g, const Direction& axis, const Direction& e1, double a,
               double b, int n) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  auto f = [&](double u) {
    const double r = std::sqrt(std::max(0.0, 1.0 - u * u));
    const Direction m = project(axis.vec() * u + e1.vec() * r);
    return g(m);
  };
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
  return sum * h / 3.0;
}

// 2 pi * integral of the rotationally symmetric profile over u in [lo, hi],
// split at profile breakpoints so Simpson only sees smooth pieces.
double profile_mass(const Radiance& g, const Direction& axis, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  const Direction e1 = orthogonal_to(axis);
  std::vector<double> cuts{lo, hi};
  for (double b : g.profile_breakpoints(axis)) {
    if (b > lo + 1e-15 && b < hi - 1e-15) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (!(b > a)) continue;
    const int n = std::max(8, static_cast<int>(std::ceil(4096.0 * (b - a) / 2.0)));
    total += simpson(g, axis, e1, a, b, n);
  }
  return 2.0 * kPi * total;
}

}  // namespace

double band_mass_quadrature(const Radiance& g, const Direction& axis, double lower,
                            double upper) {
  if (!g.rotationally_symmetric_about(axis)) {
    throw InvalidParameterError("band_mass_quadrature needs a rotationally symmetric radiance");
  }
  return profile_mass(g, axis, lower, std::min(upper, 1.0));
}

double cap_level_for_mass(const Radiance& g, const Direction& axis, double mass,
                          double c_outer) {
  if (!g.rotationally_symmetric_about(axis)) {
    throw InvalidParameterError("cap_level_for_mass needs a rotationally symmetric radiance");
  }
  if (!(c_outer > -1.0 && c_outer < 1.0)) {
    throw InvalidParameterError("outer cap level must lie in (-1, 1)");
  }
  const double support_mass = profile_mass(g, axis, -1.0, 1.0);
  const double tol = 1e-9 * std::max(support_mass, 1e-300);
  if (mass < -tol) throw MassOutOfRangeError("requested mass is negative");
  const double available = profile_mass(g, axis, c_outer, 1.0);
  if (mass > available + tol) {
    throw MassOutOfRangeError("requested mass exceeds the energy available in the outer cap");
  }
  if (mass <= tol) return 1.0 - 1e-12;
  if (mass >= available - tol) return c_outer;

  double lo = c_outer, hi = 1.0 - 1e-12;
  // mass(Cap(zeta)) decreases in zeta; keep mass(lo) >= mass >= mass(hi).
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double m = profile_mass(g, axis, mid, 1.0);
    if (std::abs(m - mass) <= tol || hi - lo < 1e-15) return mid;
    if (m > mass) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<Direction> sample_region(const SphericalRegion& region, std::size_t n,
                                     std::uint64_t seed, std::uint64_t stream) {
  const BoundingCap cap = region.bounding_cap();
  std::vector<Direction> out;
  out.reserve(n);
  const std::uint64_t budget = 100000 + 1000 * static_cast<std::uint64_t>(n);
  const Direction e1 = orthogonal_to(cap.axis);
  const Vec3 e2 = cross(cap.axis.vec(), e1.vec());
  for (std::uint64_t j = 0; out.size() < n && j < budget; ++j) {
    const double u1 = rng_uniform(seed, streams::sub(stream, 0), j);
    const double u2 = rng_uniform(seed, streams::sub(stream, 1), j);
    const double z = 1.0 - (1.0 - cap.level) * u1;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * kPi * u2;
    const Direction m =
        project(cap.axis.vec() * z + e1.vec() * (r * std::cos(phi)) + e2 * (r * std::sin(phi)));
    if (region.contains(m)) out.push_back(m);
  }
  if (out.size() < n) {
    throw InvalidParameterError("region sampling failed: region appears empty at this resolution");
  }
  return out;
}

}  // namespace nearfield
