#pragma once

#include <cstdint>

namespace nearfield {

// Counter-based generator: every variate is a pure function of
// (seed, stream, index), so sample i can be drawn from any worker without
// shared state and runs are reproducible for a fixed seed.

constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rng_word(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return mix64(seed ^ mix64(stream ^ mix64(index)));
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double rng_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return static_cast<double>(rng_word(seed, stream, index) >> 11) * 0x1.0p-53;
}

// Fixed stream tags. New call sites must add a tag here instead of reusing one.
namespace streams {
constexpr std::uint64_t sampler_u = 0x01;
constexpr std::uint64_t sampler_v = 0x02;
constexpr std::uint64_t region_sampling = 0x10;
constexpr std::uint64_t occlusion = 0x11;
constexpr std::uint64_t carve_measure = 0x20;
constexpr std::uint64_t carve_probe = 0x21;
constexpr std::uint64_t hypothesis = 0x22;
constexpr std::uint64_t verify_trace = 0x30;
constexpr std::uint64_t validation = 0x40;

/// Derives a sub-stream, e.g. one per cell or per iteration.
constexpr std::uint64_t sub(std::uint64_t base, std::uint64_t tag) {
  return mix64(base ^ (0xa076u + tag));
}
}  // namespace streams

}  // namespace nearfield
