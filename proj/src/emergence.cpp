#include "genaut/emergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace genaut {

namespace {

/// Accumulates, into path_sum(src, v), the weights of all simple paths
/// src -> v. Depth-first over nonzero edges of W; `visited` already
/// contains every state on the current path including src.
void accumulate_paths(const Eigen::MatrixXd& w, Eigen::Index src,
                      Eigen::Index here, double prod,
                      std::vector<bool>& visited, Eigen::MatrixXd& path_sum) {
  for (Eigen::Index v = 0; v < w.cols(); ++v) {
    if (visited[static_cast<std::size_t>(v)]) continue;
    const double step = w(here, v);
    if (step == 0.0) continue;
    const double weight = prod * step;
    path_sum(src, v) += weight;
    visited[static_cast<std::size_t>(v)] = true;
    accumulate_paths(w, src, v, weight, visited, path_sum);
    visited[static_cast<std::size_t>(v)] = false;
  }
}

}  // namespace

EvaluationMatrix evaluate(const WeightedAutomaton& a) {
  if (a.semiring() != SemiringKind::Real) {
    throw AlgebraError("evaluate requires a Real automaton");
  }
  const Eigen::Index n = a.state_count();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index l = 0; l < a.letter_count(); ++l) w += a.trans_at(l);

  // P = identity term plus simple-path sums; no state repeats, including
  // the start, so P(i,i) keeps only the identity contribution.
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  for (Eigen::Index src = 0; src < n; ++src) {
    visited[static_cast<std::size_t>(src)] = true;
    accumulate_paths(w, src, src, 1.0, visited, p);
    visited[static_cast<std::size_t>(src)] = false;
  }

  return a.entry().asDiagonal() * p * a.final().asDiagonal();
}

double semi_distance(const EvaluationMatrix& ea, const EvaluationMatrix& eb,
                     double alpha) {
  if (ea.rows() != eb.rows() || ea.cols() != eb.cols()) {
    throw ComparabilityError("semi_distance requires equal dimensions");
  }
  return hoelder_norm(ea - eb, alpha);
}

double semi_distance(const Agent& x, const Agent& y, double alpha) {
  if (x.behavior.state_count() != y.behavior.state_count()) {
    throw ComparabilityError("semi_distance requires equal state counts");
  }
  return semi_distance(evaluate(x.behavior), evaluate(y.behavior), alpha);
}

std::vector<Neighborhood> build_neighborhoods(const std::vector<Agent>& agents,
                                              const NeighborhoodSpec& spec) {
  const int count = static_cast<int>(agents.size());
  std::vector<Neighborhood> out(agents.size());
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)].center = i;

  switch (spec.kind) {
    case NeighborhoodSpec::Kind::All:
      for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
          if (j != i) out[static_cast<std::size_t>(i)].members.push_back(j);
        }
      }
      break;
    case NeighborhoodSpec::Kind::Spatial: {
      if (spec.radius < 0) throw ConfigError("spatial radius must be >= 0");
      for (const Agent& a : agents) {
        if (!a.position) {
          throw ConfigError("spatial neighborhoods need agent positions");
        }
      }
      for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
          if (j == i) continue;
          double d = (*agents[static_cast<std::size_t>(i)].position -
                      *agents[static_cast<std::size_t>(j)].position)
                         .norm();
          if (d <= spec.radius) {
            out[static_cast<std::size_t>(i)].members.push_back(j);
          }
        }
      }
      break;
    }
    case NeighborhoodSpec::Kind::Graph: {
      if (spec.adjacency.size() != agents.size()) {
        throw ConfigError("adjacency list size must equal agent count");
      }
      for (int i = 0; i < count; ++i) {
        for (int j : spec.adjacency[static_cast<std::size_t>(i)]) {
          if (j < 0 || j >= count) {
            throw ConfigError("adjacency index out of range");
          }
          if (j != i) out[static_cast<std::size_t>(i)].members.push_back(j);
        }
      }
      break;
    }
  }
  return out;
}

double agent_fitness(const std::vector<Agent>& agents, const Neighborhood& v,
                     double alpha) {
  const auto& center = agents.at(static_cast<std::size_t>(v.center));
  double sum = 0;
  for (int j : v.members) {
    double d = semi_distance(center, agents.at(static_cast<std::size_t>(j)),
                             alpha);
    sum += d * d;
  }
  if (sum == 0.0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(v.members.size()) / sum;
}

double compose_fitness(double f_emergent, double f_problem, ComposeMode mode,
                       double weight) {
  if (!std::isfinite(f_problem) || f_problem < 0) {
    throw ParameterError("problem fitness must be finite and >= 0");
  }
  if (mode == ComposeMode::Product) {
    if (std::isinf(f_emergent)) return f_problem == 0.0 ? 0.0 : f_emergent;
    return f_emergent * f_problem;
  }
  if (weight < 0 || weight > 1) {
    throw ParameterError("weighted_sum weight must lie in [0,1]");
  }
  double normalized =
      std::isinf(f_emergent) ? 1.0 : f_emergent / (1.0 + f_emergent);
  return weight * normalized + (1.0 - weight) * f_problem;
}

std::vector<std::vector<int>> detect_aggregations(
    const std::vector<Agent>& agents, double epsilon, double alpha) {
  if (epsilon < 0) throw ParameterError("epsilon must be >= 0");
  const int count = static_cast<int>(agents.size());
  std::vector<EvaluationMatrix> evals;
  evals.reserve(agents.size());
  for (const Agent& a : agents) evals.push_back(evaluate(a.behavior));

  // Flood fill over the epsilon graph.
  std::vector<int> component(agents.size(), -1);
  int next_component = 0;
  for (int i = 0; i < count; ++i) {
    if (component[static_cast<std::size_t>(i)] != -1) continue;
    std::vector<int> stack{i};
    component[static_cast<std::size_t>(i)] = next_component;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < count; ++v) {
        if (component[static_cast<std::size_t>(v)] != -1) continue;
        if (semi_distance(evals[static_cast<std::size_t>(u)],
                          evals[static_cast<std::size_t>(v)], alpha) <=
            epsilon) {
          component[static_cast<std::size_t>(v)] = next_component;
          stack.push_back(v);
        }
      }
    }
    ++next_component;
  }

  std::vector<std::vector<int>> clusters(
      static_cast<std::size_t>(next_component));
  for (int i = 0; i < count; ++i) {
    clusters[static_cast<std::size_t>(component[static_cast<std::size_t>(i)])]
        .push_back(i);
  }
  auto smallest_id = [&](const std::vector<int>& c) -> const std::string& {
    const std::string* best = &agents[static_cast<std::size_t>(c.front())].id;
    for (int i : c) {
      const std::string& id = agents[static_cast<std::size_t>(i)].id;
      if (id < *best) best = &id;
    }
    return *best;
  };
  for (auto& c : clusters) {
    std::sort(c.begin(), c.end(), [&](int x, int y) {
      return agents[static_cast<std::size_t>(x)].id <
             agents[static_cast<std::size_t>(y)].id;
    });
  }
  std::sort(clusters.begin(), clusters.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              return smallest_id(a) < smallest_id(b);
            });
  return clusters;
}

namespace {

struct GenerationView {
  std::vector<Neighborhood> neighborhoods;
  std::vector<EvaluationMatrix> evals;
};

GenerationView view_of(const std::vector<Agent>& agents,
                       const EmergeRunConfig& cfg) {
  GenerationView view;
  view.neighborhoods = build_neighborhoods(agents, cfg.neighborhoods);
  view.evals.reserve(agents.size());
  for (const Agent& a : agents) view.evals.push_back(evaluate(a.behavior));
  return view;
}

double fitness_against(const GenerationView& view,
                       const EvaluationMatrix& candidate_eval, int slot,
                       const WeightedAutomaton& behavior,
                       const EmergeRunConfig& cfg) {
  const Neighborhood& v = view.neighborhoods[static_cast<std::size_t>(slot)];
  double sum = 0;
  for (int j : v.members) {
    double d = semi_distance(candidate_eval,
                             view.evals[static_cast<std::size_t>(j)],
                             cfg.alpha);
    sum += d * d;
  }
  double fe = sum == 0.0 ? std::numeric_limits<double>::infinity()
                         : static_cast<double>(v.members.size()) / sum;
  if (!cfg.problem_fitness) return fe;
  return compose_fitness(fe, cfg.problem_fitness(behavior), cfg.compose_mode,
                         cfg.compose_weight);
}

EmergeGenerationStats emerge_stats(const std::vector<Agent>& agents,
                                   const GenerationView& view, int generation,
                                   const EmergeRunConfig& cfg) {
  EmergeGenerationStats row;
  row.generation = generation;
  row.fit_min = std::numeric_limits<double>::infinity();
  row.fit_max = -std::numeric_limits<double>::infinity();
  double fit_sum = 0;
  double dist_sum = 0;
  std::size_t dist_count = 0;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    double f = fitness_against(view, view.evals[i], static_cast<int>(i),
                               agents[i].behavior, cfg);
    fit_sum += f;
    row.fit_min = std::min(row.fit_min, f);
    row.fit_max = std::max(row.fit_max, f);
    for (int j : view.neighborhoods[i].members) {
      dist_sum += semi_distance(view.evals[i],
                                view.evals[static_cast<std::size_t>(j)],
                                cfg.alpha);
      ++dist_count;
    }
  }
  row.fit_mean = fit_sum / static_cast<double>(agents.size());
  row.mean_within_nbhd_dist =
      dist_count == 0 ? 0.0 : dist_sum / static_cast<double>(dist_count);
  row.n_clusters = static_cast<int>(
      detect_aggregations(agents, cfg.epsilon, cfg.alpha).size());
  return row;
}

}  // namespace

EmergeRunRecord evolve_emergent(std::vector<Agent> agents,
                                const EmergeRunConfig& cfg) {
  if (agents.size() < 2 || agents.size() % 2 != 0) {
    throw ConfigError("agent count must be even and >= 2");
  }
  if (cfg.generations < 0) throw ConfigError("generations must be >= 0");
  for (const Agent& a : agents) {
    if (a.behavior.state_count() != agents.front().behavior.state_count() ||
        a.behavior.alphabet() != agents.front().behavior.alphabet() ||
        a.behavior.semiring() != agents.front().behavior.semiring()) {
      throw ConfigError("agent behaviors must be shape-homogeneous");
    }
  }

  EmergeRunRecord record;
  GenerationView view = view_of(agents, cfg);
  record.stats.push_back(emerge_stats(agents, view, 0, cfg));

  Population pop;
  pop.members.reserve(agents.size());
  for (const Agent& a : agents) pop.members.push_back(a.behavior);
  pop.generation = 0;

  for (int g = 0; g < cfg.generations; ++g) {
    // The view is frozen per generation: candidates compare against the
    // parents' cached evaluations, so pair order cannot matter.
    FitnessFn fitness = [&](const WeightedAutomaton& candidate, int slot,
                            std::mt19937_64&) {
      return fitness_against(view, evaluate(candidate), slot, candidate, cfg);
    };
    std::vector<PairTrace> trace;
    pop = evolve_generation(pop, fitness, cfg.genetic, &trace);
    record.traces.push_back(std::move(trace));
    for (std::size_t i = 0; i < agents.size(); ++i) {
      agents[i].behavior = pop.members[i];
    }
    view = view_of(agents, cfg);
    record.stats.push_back(emerge_stats(agents, view, g + 1, cfg));
  }

  record.final_clusters = detect_aggregations(agents, cfg.epsilon, cfg.alpha);
  record.final_agents = std::move(agents);
  return record;
}

}  // namespace genaut
