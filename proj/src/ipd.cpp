#include "genaut/ipd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "genaut/rng.hpp"

namespace genaut {

namespace {

bool in_unit(double p) { return p >= 0.0 && p <= 1.0; }

Action action_of_state(int state) {
  return state == 0 ? Action::Cooperate : Action::Defect;
}

/// P(next state = 0) for a player in `state` that perceived `seen`.
double coop_prob(const WeightedAutomaton& a, int state, Action seen) {
  return a.trans(action_symbol(seen))(state, 0);
}

int sample_state(double prob_state0, std::mt19937_64& rng) {
  return uniform01(rng) < prob_state0 ? 0 : 1;
}

}  // namespace

StrategyAutomaton::StrategyAutomaton(WeightedAutomaton core)
    : core_(std::move(core)) {
  if (core_.semiring() != SemiringKind::Real ||
      core_.alphabet() != kStrategyAlphabet || core_.state_count() != 2) {
    throw ParameterError(
        "strategy automaton must be Real, two-state, over alphabet \"CD\"");
  }
  if (!is_stochastic(core_)) {
    throw ParameterError(
        "strategy automaton must be stochastic (entry and rows sum to 1)");
  }
}

StrategyAutomaton build_strategy(const StrategyParams& p) {
  for (double v : {p.p1, p.p2, p.p3, p.p4, p.p5, p.p6}) {
    if (!in_unit(v)) {
      throw ParameterError("strategy parameters must lie in [0,1]");
    }
  }
  Eigen::RowVectorXd entry(2);
  entry << p.p1, 1 - p.p1;
  Eigen::VectorXd final(2);
  final << p.p6, 1 - p.p6;
  Eigen::MatrixXd tc(2, 2), td(2, 2);
  tc << p.p2, 1 - p.p2,
        p.p3, 1 - p.p3;
  td << 1 - p.p4, p.p4,
        1 - p.p5, p.p5;
  return StrategyAutomaton(WeightedAutomaton(
      SemiringKind::Real, kStrategyAlphabet, entry, final, {tc, td}));
}

StrategyParams params_of(const StrategyAutomaton& s) {
  const WeightedAutomaton& a = s.core();
  StrategyParams p;
  p.p1 = a.entry()(0);
  p.p2 = a.trans('C')(0, 0);
  p.p3 = a.trans('C')(1, 0);
  p.p4 = a.trans('D')(0, 1);
  p.p5 = a.trans('D')(1, 1);
  p.p6 = a.final()(0);
  return p;
}

StrategyAutomaton make_tit_for_tat() {
  return build_strategy({1, 1, 1, 1, 1, 1});
}

StrategyAutomaton make_vindictive() {
  return build_strategy({1, 1, 0, 1, 1, 1});
}

StrategyAutomaton make_always_cooperate() {
  return build_strategy({1, 1, 1, 0, 0, 1});
}

StrategyAutomaton make_always_defect() {
  return build_strategy({0, 0, 0, 1, 1, 0});
}

StrategyAutomaton make_uniform_random() {
  return build_strategy({0.5, 0.5, 0.5, 0.5, 0.5, 0.5});
}

StrategyAutomaton strategy_from_id(const std::string& id) {
  if (id == "tft") return make_tit_for_tat();
  if (id == "vindictive") return make_vindictive();
  if (id == "allc") return make_always_cooperate();
  if (id == "alld") return make_always_defect();
  if (id == "uniform") return make_uniform_random();
  const std::string prefix = "params:";
  if (id.rfind(prefix, 0) == 0) {
    std::istringstream in(id.substr(prefix.size()));
    double v[6];
    char sep = ',';
    for (int i = 0; i < 6; ++i) {
      if (i > 0 && (!(in >> sep) || sep != ',')) {
        throw ParameterError("params: expected 6 comma-separated values");
      }
      if (!(in >> v[i])) {
        throw ParameterError("params: expected 6 comma-separated values");
      }
    }
    std::string rest;
    if (in >> rest) {
      throw ParameterError("params: trailing characters after 6 values");
    }
    return build_strategy({v[0], v[1], v[2], v[3], v[4], v[5]});
  }
  throw ParameterError(
      "unknown strategy id \"" + id +
      "\" (expected tft, vindictive, allc, alld, uniform, or params:...)");
}

bool is_deterministic(const StrategyAutomaton& s) {
  StrategyParams p = params_of(s);
  for (double v : {p.p1, p.p2, p.p3, p.p4, p.p5}) {
    if (v != 0.0 && v != 1.0) return false;
  }
  return true;
}

MatchResult play_match(const StrategyAutomaton& a, const StrategyAutomaton& b,
                       int rounds, std::mt19937_64& rng,
                       const PayoffTable& table) {
  if (rounds < 1) throw ParameterError("play_match: rounds must be >= 1");
  MatchResult result;
  result.history.reserve(static_cast<std::size_t>(rounds));
  int sa = 0, sb = 0;
  for (int t = 0; t < rounds; ++t) {
    if (t == 0) {
      sa = sample_state(a.core().entry()(0), rng);
      sb = sample_state(b.core().entry()(0), rng);
    } else {
      Action seen_by_a = action_of_state(sb);
      Action seen_by_b = action_of_state(sa);
      int na = sample_state(coop_prob(a.core(), sa, seen_by_a), rng);
      int nb = sample_state(coop_prob(b.core(), sb, seen_by_b), rng);
      sa = na;
      sb = nb;
    }
    Action act_a = action_of_state(sa);
    Action act_b = action_of_state(sb);
    auto [pa, pb] = table.payoff(act_a, act_b);
    result.payoff_a += pa;
    result.payoff_b += pb;
    result.history.emplace_back(act_a, act_b);
  }
  return result;
}

std::pair<double, double> expected_payoff(const StrategyAutomaton& a,
                                          const StrategyAutomaton& b,
                                          int rounds,
                                          const PayoffTable& table) {
  if (rounds < 1) throw ParameterError("expected_payoff: rounds must be >= 1");
  // joint(i, j) = P(a in state i, b in state j)
  Eigen::Matrix2d joint = a.core().entry().transpose() * b.core().entry();
  double total_a = 0, total_b = 0;
  for (int t = 0; t < rounds; ++t) {
    if (t > 0) {
      Eigen::Matrix2d next = Eigen::Matrix2d::Zero();
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const double mass = joint(i, j);
          if (mass == 0.0) continue;
          // a perceives b's state-as-action and vice versa.
          const Eigen::MatrixXd& ta = a.core().trans(action_symbol(action_of_state(j)));
          const Eigen::MatrixXd& tb = b.core().trans(action_symbol(action_of_state(i)));
          for (int ni = 0; ni < 2; ++ni) {
            for (int nj = 0; nj < 2; ++nj) {
              next(ni, nj) += mass * ta(i, ni) * tb(j, nj);
            }
          }
        }
      }
      joint = next;
    }
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        auto [pa, pb] = table.payoff(action_of_state(i), action_of_state(j));
        total_a += joint(i, j) * pa;
        total_b += joint(i, j) * pb;
      }
    }
  }
  return {total_a, total_b};
}

double tournament_fitness(const StrategyAutomaton& a,
                          const StrategyAutomaton& s0, int rounds, int repeats,
                          std::mt19937_64& rng, const PayoffTable& table) {
  if (repeats < 1) throw ParameterError("tournament_fitness: repeats must be >= 1");
  double total = 0;
  for (int r = 0; r < repeats; ++r) {
    total += play_match(a, s0, rounds, rng, table).payoff_a;
  }
  return total;
}

double expected_tournament_fitness(const StrategyAutomaton& a,
                                   const StrategyAutomaton& s0, int rounds,
                                   int repeats, const PayoffTable& table) {
  if (repeats < 1) throw ParameterError("tournament_fitness: repeats must be >= 1");
  return repeats * expected_payoff(a, s0, rounds, table).first;
}

namespace {

IpdGenerationStats ipd_stats(const Population& pop,
                             const StrategyAutomaton& s0,
                             const IpdRunConfig& cfg) {
  IpdGenerationStats row;
  row.generation = pop.generation;
  const std::uint64_t seed = cfg.genetic.rng_seed;
  double sum = 0, coop_sum = 0;
  row.fit_min = std::numeric_limits<double>::infinity();
  row.fit_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pop.members.size(); ++i) {
    StrategyAutomaton member(pop.members[i]);
    double fit;
    if (cfg.fitness_mode == FitnessMode::Expected) {
      fit = expected_tournament_fitness(member, s0, cfg.rounds, cfg.repeats);
    } else {
      auto rng = substream(seed, stream::kStatsFitness,
                           static_cast<std::uint64_t>(pop.generation), i);
      fit = tournament_fitness(member, s0, cfg.rounds, cfg.repeats, rng);
    }
    sum += fit;
    row.fit_min = std::min(row.fit_min, fit);
    row.fit_max = std::max(row.fit_max, fit);

    auto coop_rng = substream(seed, stream::kStatsCoop,
                              static_cast<std::uint64_t>(pop.generation), i);
    MatchResult m = play_match(member, s0, cfg.rounds, coop_rng);
    int coop = 0;
    for (const auto& [own, other] : m.history) {
      if (own == Action::Cooperate) ++coop;
    }
    coop_sum += static_cast<double>(coop) / cfg.rounds;

    StrategyParams p = params_of(member);
    const double ps[6] = {p.p1, p.p2, p.p3, p.p4, p.p5, p.p6};
    for (int k = 0; k < 6; ++k) row.param_means[static_cast<std::size_t>(k)] += ps[k];
  }
  const double count = static_cast<double>(pop.members.size());
  row.fit_mean = sum / count;
  row.coop_rate = coop_sum / count;
  for (auto& v : row.param_means) v /= count;
  return row;
}

}  // namespace

IpdRunRecord evolve_ipd(const IpdRunConfig& cfg) {
  if (cfg.pop_size < 2 || cfg.pop_size % 2 != 0) {
    throw ConfigError("pop_size must be even and >= 2");
  }
  if (cfg.generations < 0) throw ConfigError("generations must be >= 0");
  if (cfg.rounds < 1) throw ConfigError("rounds must be >= 1");
  if (cfg.repeats < 1) throw ConfigError("repeats must be >= 1");
  if (!cfg.genetic.stochastic_mode) {
    throw ConfigError("strategy evolution requires stochastic_mode");
  }
  validate(cfg.genetic, 2);
  StrategyAutomaton s0 = strategy_from_id(cfg.s0_id);

  IpdRunRecord record;
  record.config = cfg;

  Population pop;
  pop.members.reserve(static_cast<std::size_t>(cfg.pop_size));
  for (int i = 0; i < cfg.pop_size; ++i) {
    auto rng = substream(cfg.genetic.rng_seed, stream::kInit,
                         static_cast<std::uint64_t>(i));
    StrategyParams p;
    p.p1 = uniform01(rng);
    p.p2 = uniform01(rng);
    p.p3 = uniform01(rng);
    p.p4 = uniform01(rng);
    p.p5 = uniform01(rng);
    p.p6 = uniform01(rng);
    pop.members.push_back(build_strategy(p).core());
  }

  record.stats.push_back(ipd_stats(pop, s0, cfg));

  FitnessFn fitness = [&](const WeightedAutomaton& candidate, int,
                          std::mt19937_64& rng) {
    StrategyAutomaton s(candidate);
    if (cfg.fitness_mode == FitnessMode::Expected) {
      return expected_tournament_fitness(s, s0, cfg.rounds, cfg.repeats);
    }
    return tournament_fitness(s, s0, cfg.rounds, cfg.repeats, rng);
  };

  for (int g = 0; g < cfg.generations; ++g) {
    std::vector<PairTrace> trace;
    pop = evolve_generation(pop, fitness, cfg.genetic, &trace);
    record.traces.push_back(std::move(trace));
    record.stats.push_back(ipd_stats(pop, s0, cfg));
  }
  record.final_population = std::move(pop);
  return record;
}

}  // namespace genaut
