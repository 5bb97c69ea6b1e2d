#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "genaut/automaton.hpp"
#include "genaut/genetics.hpp"

namespace genaut {

/// The two prisoner's dilemma actions. State 0 of a strategy automaton
/// means "just cooperated", state 1 "just betrayed"; the sampled next
/// state IS the emitted action.
enum class Action { Cooperate, Defect };

inline char action_symbol(Action a) {
  return a == Action::Cooperate ? 'C' : 'D';
}

inline constexpr const char* kStrategyAlphabet = "CD";

/// Bimatrix payoff. The default is the classic dilemma:
///   (C,C) -> (3,3)   (C,D) -> (0,5)
///   (D,C) -> (5,0)   (D,D) -> (1,1)
struct PayoffTable {
  double cc_own = 3, cc_other = 3;
  double cd_own = 0, cd_other = 5;
  double dc_own = 5, dc_other = 0;
  double dd_own = 1, dd_other = 1;

  std::pair<double, double> payoff(Action own, Action other) const {
    if (own == Action::Cooperate) {
      return other == Action::Cooperate ? std::pair{cc_own, cc_other}
                                        : std::pair{cd_own, cd_other};
    }
    return other == Action::Cooperate ? std::pair{dc_own, dc_other}
                                      : std::pair{dd_own, dd_other};
  }
};

/// The six probabilities labeling a two-state strategy automaton:
///   p1 open with C          p2 play C after (C, saw C)
///   p3 play C after (D, saw C)   p4 play D after (C, saw D)
///   p5 play D after (D, saw D)   p6 final cost of the C state
struct StrategyParams {
  double p1 = 0.5, p2 = 0.5, p3 = 0.5, p4 = 0.5, p5 = 0.5, p6 = 0.5;
};

/// A two-state stochastic automaton over alphabet "CD" driving match play.
/// Wrapping validates shape and stochasticity (ParameterError otherwise).
class StrategyAutomaton {
 public:
  explicit StrategyAutomaton(WeightedAutomaton core);

  const WeightedAutomaton& core() const noexcept { return core_; }

 private:
  WeightedAutomaton core_;
};

/// Builds the linear representation of the parameters:
///   entry = (p1, 1-p1)            final = (p6, 1-p6)^T
///   trans(C) = [[p2, 1-p2],       trans(D) = [[1-p4, p4],
///               [p3, 1-p3]]                   [1-p5, p5]]
/// Any parameter outside [0,1] is a ParameterError.
StrategyAutomaton build_strategy(const StrategyParams& p);

/// Reads the parameters back off a strategy automaton.
StrategyParams params_of(const StrategyAutomaton& s);

/// Named strategies. p6 is irrelevant to play; the builtins pin it to the
/// weight of their steady action (1 for the cooperative ones, 0 for
/// always-defect, 0.5 for uniform) so evaluation matrices stay meaningful.
StrategyAutomaton make_tit_for_tat();    // p = (1,1,1,1,1,1)
StrategyAutomaton make_vindictive();     // p = (1,1,0,1,1,1)
StrategyAutomaton make_always_cooperate();  // p = (1,1,1,0,0,1)
StrategyAutomaton make_always_defect();     // p = (0,0,0,1,1,0)
StrategyAutomaton make_uniform_random();    // p = (.5,.5,.5,.5,.5,.5)

/// Resolves a CLI strategy id: tft, vindictive, allc, alld, uniform, or
/// params:p1,p2,p3,p4,p5,p6. Unknown ids are a ParameterError.
StrategyAutomaton strategy_from_id(const std::string& id);

/// True when every play-relevant parameter (p1..p5) is 0 or 1, so match
/// play never consults the random stream's outcome.
bool is_deterministic(const StrategyAutomaton& s);

struct MatchResult {
  double payoff_a = 0;
  double payoff_b = 0;
  std::vector<std::pair<Action, Action>> history;
};

/// Plays `rounds` rounds. Round 1 actions are sampled from each entry
/// vector; in later rounds each player samples its next state from the
/// transition row selected by the opponent's previous action, conditioned
/// on its own previous state. Player a draws before player b each round.
MatchResult play_match(const StrategyAutomaton& a, const StrategyAutomaton& b,
                       int rounds, std::mt19937_64& rng,
                       const PayoffTable& table = PayoffTable{});

/// Exact expected cumulative payoffs by forward propagation of the joint
/// state distribution (the independent oracle for play_match).
std::pair<double, double> expected_payoff(const StrategyAutomaton& a,
                                          const StrategyAutomaton& b,
                                          int rounds,
                                          const PayoffTable& table = PayoffTable{});

/// Sum of a's payoffs over `repeats` matches of `rounds` rounds vs s0.
double tournament_fitness(const StrategyAutomaton& a,
                          const StrategyAutomaton& s0, int rounds, int repeats,
                          std::mt19937_64& rng,
                          const PayoffTable& table = PayoffTable{});

/// Deterministic variant: repeats * expected_payoff(a, s0, rounds).first.
double expected_tournament_fitness(const StrategyAutomaton& a,
                                   const StrategyAutomaton& s0, int rounds,
                                   int repeats,
                                   const PayoffTable& table = PayoffTable{});

enum class FitnessMode { Sampled, Expected };

struct IpdRunConfig {
  int pop_size = 32;
  int generations = 60;
  std::string s0_id = "tft";
  int rounds = 64;
  int repeats = 1;
  FitnessMode fitness_mode = FitnessMode::Sampled;
  GeneticConfig genetic;  // rng_seed doubles as the master run seed
};

/// One stats row per generation (0 .. generations).
struct IpdGenerationStats {
  int generation = 0;
  double fit_min = 0, fit_mean = 0, fit_max = 0;
  double coop_rate = 0;  // empirical, one measurement match per member
  std::array<double, 6> param_means{};
};

struct IpdRunRecord {
  IpdRunConfig config;
  std::vector<IpdGenerationStats> stats;
  Population final_population;
  std::vector<std::vector<PairTrace>> traces;  // one list per generation
};

/// Seeds pop_size random parameter vectors (each p_i uniform on [0,1]),
/// then runs the 4-uple GA against s0 for cfg.generations steps.
IpdRunRecord evolve_ipd(const IpdRunConfig& cfg);

}  // namespace genaut
