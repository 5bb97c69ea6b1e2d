#pragma once

#include <cstdint>
#include <random>

namespace genaut {

/// splitmix64 finalizer. Bijective on 64-bit values with full avalanche,
/// which is what makes the chained stream derivation below collision-safe
/// in practice.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stream tags. Every consumer of randomness owns a tag so that streams
/// are independent of evaluation order and runs replay exactly from one
/// master seed.
namespace stream {
inline constexpr std::uint64_t kInit = 1;          // population initialisation
inline constexpr std::uint64_t kPairing = 2;       // per-generation shuffle
inline constexpr std::uint64_t kPair = 3;          // per-pair genetics + fitness
inline constexpr std::uint64_t kStatsFitness = 4;  // per-generation stats fitness
inline constexpr std::uint64_t kStatsCoop = 5;     // per-generation stats measurement match
inline constexpr std::uint64_t kScenarioCenter = 6;  // clustered-agent centers
inline constexpr std::uint64_t kScenarioAgent = 7;   // clustered-agent members
}  // namespace stream

/// Derives an independent generator from (seed, tag, a, b). All randomness
/// in the toolkit flows through substreams of a single 64-bit seed.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t tag,
                                 std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t s = mix64(seed);
  s = mix64(s ^ tag);
  s = mix64(s ^ a);
  s = mix64(s ^ b);
  return std::mt19937_64(s);
}

/// Uniform draw in [0, 1).
inline double uniform01(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace genaut
