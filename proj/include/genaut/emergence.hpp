#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "genaut/automaton.hpp"
#include "genaut/genetics.hpp"

namespace genaut {

/// An entity that perceives and acts; its behavior is a weighted automaton.
/// The optional position feeds spatial neighborhoods.
struct Agent {
  std::string id;
  WeightedAutomaton behavior;
  std::optional<Eigen::Vector2d> position;
};

/// m(i,j) aggregates the weights of acyclic successful paths from state i
/// to state j: entry(i) * P(i,j) * final(j), where P sums the letter-summed
/// one-step weights along simple paths (see evaluate). m(i,j) vanishes
/// whenever entry(i) or final(j) does.
using EvaluationMatrix = Eigen::MatrixXd;

/// Computes the evaluation matrix of a Real automaton. With
/// W = sum over letters of trans[letter] (perception-independent one-step
/// weight), P(i,j) sums the products of W-weights over all paths i -> j
/// that repeat no state, including the start; P(i,i)'s only term is the
/// identity contribution 1. Boolean automata → AlgebraError.
EvaluationMatrix evaluate(const WeightedAutomaton& a);

/// Entrywise Hoelder-alpha distance of two evaluation matrices.
double semi_distance(const EvaluationMatrix& ea, const EvaluationMatrix& eb,
                     double alpha = 2.0);

/// Entrywise Hoelder-alpha distance of the agents' evaluation matrices.
/// Different state counts → ComparabilityError.
double semi_distance(const Agent& x, const Agent& y, double alpha = 2.0);

/// A neighborhood is held as agent indices into the population.
struct Neighborhood {
  int center = 0;
  std::vector<int> members;  // never contains center
};

/// How neighborhoods are derived.
///   All:     everyone except the agent itself.
///   Spatial: agents within radius of the center's position (2-norm);
///            requires every agent to carry a position.
///   Graph:   an explicit adjacency list.
struct NeighborhoodSpec {
  enum class Kind { All, Spatial, Graph };
  Kind kind = Kind::All;
  double radius = 0;
  std::vector<std::vector<int>> adjacency;
};

std::vector<Neighborhood> build_neighborhoods(const std::vector<Agent>& agents,
                                              const NeighborhoodSpec& spec);

/// card(members) / sum of squared semi-distances to the members; infinite
/// when that sum is exactly 0 (identical behaviors or empty neighborhood).
double agent_fitness(const std::vector<Agent>& agents, const Neighborhood& v,
                     double alpha = 2.0);

enum class ComposeMode { Product, WeightedSum };

/// Combines the emergence fitness with a problem-specific one.
/// Product: f_emergent * f_problem with inf * 0 = 0 by convention.
/// WeightedSum: w * f/(1+f) + (1-w) * f_problem, infinity normalized to 1.
/// f_problem must be finite and >= 0; w in [0,1] (ParameterError).
double compose_fitness(double f_emergent, double f_problem, ComposeMode mode,
                       double weight = 0.5);

/// Connected components of the "semi_distance <= epsilon" graph. Clusters
/// and their members are ordered by smallest agent id. epsilon < 0 →
/// ParameterError.
std::vector<std::vector<int>> detect_aggregations(
    const std::vector<Agent>& agents, double epsilon, double alpha = 2.0);

struct EmergeRunConfig {
  int generations = 40;
  NeighborhoodSpec neighborhoods;
  double alpha = 2.0;
  double epsilon = 0.1;  // aggregation-detection threshold for stats
  GeneticConfig genetic;
  /// Optional problem fitness composed with the emergence fitness.
  std::function<double(const WeightedAutomaton&)> problem_fitness;
  ComposeMode compose_mode = ComposeMode::Product;
  double compose_weight = 0.5;
};

struct EmergeGenerationStats {
  int generation = 0;
  double fit_min = 0, fit_mean = 0, fit_max = 0;
  double mean_within_nbhd_dist = 0;
  int n_clusters = 0;
};

struct EmergeRunRecord {
  std::vector<EmergeGenerationStats> stats;
  std::vector<Agent> final_agents;
  std::vector<std::vector<int>> final_clusters;
  std::vector<std::vector<PairTrace>> traces;
};

/// Runs the 4-uple GA on agent behaviors with the neighborhood fitness.
/// Each generation: neighborhoods are rebuilt, every agent's evaluation
/// matrix is cached, and a candidate's fitness is computed against the
/// cached parent evaluations of its slot's neighborhood (children inherit
/// id and position from the slot they occupy). Stats rows report the
/// population's agent_fitness spread at each generation, the mean of
/// semi_distance(center, member) over all neighborhoods, and the cluster
/// count at cfg.epsilon.
EmergeRunRecord evolve_emergent(std::vector<Agent> agents,
                                const EmergeRunConfig& cfg);

}  // namespace genaut
