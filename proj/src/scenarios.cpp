#include "genaut/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "genaut/ipd.hpp"
#include "genaut/rng.hpp"

namespace genaut {

namespace {

/// Box-Muller, first value only: keeps the draw count per call fixed and
/// avoids the implementation-defined state of std::normal_distribution.
double gauss(std::mt19937_64& rng) {
  double u1 = 1.0 - uniform01(rng);  // (0, 1], log stays finite
  double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

std::vector<Agent> clustered_strategy_agents(int count, int centers,
                                             double noise,
                                             std::uint64_t seed) {
  if (count < 2 || count % 2 != 0) {
    throw ConfigError("agent count must be even and >= 2");
  }
  if (centers < 1) throw ConfigError("centers must be >= 1");
  if (noise < 0) throw ConfigError("noise must be >= 0");

  std::vector<std::array<double, 6>> center_params(
      static_cast<std::size_t>(centers));
  for (int c = 0; c < centers; ++c) {
    auto rng = substream(seed, stream::kScenarioCenter,
                         static_cast<std::uint64_t>(c));
    for (auto& p : center_params[static_cast<std::size_t>(c)]) {
      p = uniform01(rng);
    }
  }

  std::vector<Agent> agents;
  agents.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int c = i % centers;
    auto rng = substream(seed, stream::kScenarioAgent,
                         static_cast<std::uint64_t>(i));
    const auto& base = center_params[static_cast<std::size_t>(c)];
    StrategyParams p;
    double* fields[6] = {&p.p1, &p.p2, &p.p3, &p.p4, &p.p5, &p.p6};
    for (int k = 0; k < 6; ++k) {
      *fields[k] = clamp01(base[static_cast<std::size_t>(k)] +
                           noise * gauss(rng));
    }
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(c) / centers;
    Eigen::Vector2d pos(std::cos(angle) + noise * gauss(rng),
                        std::sin(angle) + noise * gauss(rng));

    char id[16];
    std::snprintf(id, sizeof id, "a%03d", i);
    agents.push_back(Agent{id, build_strategy(p).core(), pos});
  }
  return agents;
}

}  // namespace genaut
