#pragma once

#include <cstdint>
#include <vector>

#include "genaut/emergence.hpp"

namespace genaut {

/// Builds `count` two-state strategy agents whose parameters cluster
/// around `centers` uniformly drawn parameter vectors: agent i belongs to
/// cluster i % centers and perturbs each center parameter by N(0, noise)
/// clamped to [0,1]. Positions put cluster c on the unit circle at angle
/// 2*pi*c/centers with N(0, noise) scatter. Ids are a000, a001, ...
/// count must be even and >= 2, centers >= 1, noise >= 0 (ConfigError).
std::vector<Agent> clustered_strategy_agents(int count, int centers,
                                             double noise,
                                             std::uint64_t seed);

}  // namespace genaut
