#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "genaut/automaton.hpp"

namespace genaut {

/// Genetic view of an automaton: the chromosome is the ordered sequence of
/// transition matrices (alphabet order), and an allele is one matrix row.
/// Entry/final vectors are not part of the chromosome.
class Chromosome {
 public:
  explicit Chromosome(const WeightedAutomaton& owner) : owner_(&owner) {}

  Eigen::Index matrix_count() const { return owner_->letter_count(); }
  Eigen::Index allele_length() const { return owner_->state_count(); }
  Eigen::RowVectorXd allele(Eigen::Index letter, Eigen::Index row) const;

 private:
  const WeightedAutomaton* owner_;
};

/// How mutation draws a fresh allele.
///   Simplex:     uniform on the probability simplex (stochastic mode).
///   UniformUnit: entries i.i.d. uniform on [0,1]; on Boolean automata this
///                degrades to independent fair coin flips.
///   None:        the chosen row keeps its current values (zero-effect
///                mutation, useful for controlled experiments).
enum class MutationSampler { Simplex, UniformUnit, None };

enum class SelectionTiebreak { PreferParents, PreferChildren };

struct GeneticConfig {
  bool stochastic_mode = true;
  MutationSampler mutation_row_sampler = MutationSampler::Simplex;
  /// Rows exchanged by crossover: 0 draws a uniformly random nonempty
  /// proper subset of row indices per pair (with n = 1 the only nonempty
  /// choice is {0}); a positive count c <= n picks c distinct rows.
  int crossover_row_count = 0;
  SelectionTiebreak selection_tiebreak = SelectionTiebreak::PreferParents;
  std::uint64_t rng_seed = 0;
};

/// Rejects contradictory settings (UniformUnit in stochastic mode,
/// negative or > n crossover counts).
void validate(const GeneticConfig& cfg, Eigen::Index n);

struct Population {
  std::vector<WeightedAutomaton> members;
  int generation = 0;
};

/// Fitness callback. `slot` is the population index whose place the
/// candidate occupies (children report their parent's slot), letting
/// neighborhood-relative fitness identify the candidate's surroundings.
/// `rng` is the pair's private stream; sampled fitness draws from it.
using FitnessFn = std::function<double(
    const WeightedAutomaton& candidate, int slot, std::mt19937_64& rng)>;

/// Per-pair record of one selection step, for auditing elitism.
struct PairTrace {
  int slot_a = 0;
  int slot_b = 0;
  /// Fitness of [parent_a, parent_b, child_a, child_b].
  std::array<double, 4> fitness{};
  /// Indices into that 4-uple of the two survivors, in placement order
  /// (first goes to slot_a).
  std::array<int, 2> survivors{};
};

/// Deep copy; the clone is independent of the original.
WeightedAutomaton duplicate(const WeightedAutomaton& a);

/// Exchanges row r of a.trans[letter] and b.trans[letter] for every listed
/// row r and every letter (the same row set applies to all letters).
/// Entry/final vectors pass through unchanged. Row indices are 0-based.
/// Shape mismatch → ComparabilityError; bad row index → ParameterError.
std::pair<WeightedAutomaton, WeightedAutomaton> crossover(
    const WeightedAutomaton& a, const WeightedAutomaton& b,
    const std::vector<Eigen::Index>& rows);

/// For each letter independently, replaces one uniformly chosen row with a
/// fresh row from cfg.mutation_row_sampler. Entry/final untouched.
WeightedAutomaton mutate(const WeightedAutomaton& a, const GeneticConfig& cfg,
                         std::mt19937_64& rng);

/// One generation of the 4-uple selection loop: members are paired by a
/// seeded random perfect matching; each pair produces two children via
/// duplicate → crossover → mutate; all four fitnesses are evaluated and the
/// best two survive (ties broken per cfg.selection_tiebreak). Every random
/// draw of pair i in generation g comes from substream(cfg.rng_seed, kPair,
/// g, i), so pairs are order-independent. Odd population → ConfigError;
/// NaN fitness → ParameterError.
Population evolve_generation(const Population& pop, const FitnessFn& fitness,
                             const GeneticConfig& cfg,
                             std::vector<PairTrace>* trace = nullptr);

}  // namespace genaut
