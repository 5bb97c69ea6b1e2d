#include "genaut/genetics.hpp"

#include <algorithm>
#include <cmath>

#include "genaut/rng.hpp"

namespace genaut {

Eigen::RowVectorXd Chromosome::allele(Eigen::Index letter,
                                      Eigen::Index row) const {
  if (letter < 0 || letter >= matrix_count()) {
    throw ParameterError("chromosome: letter index out of range");
  }
  if (row < 0 || row >= allele_length()) {
    throw ParameterError("chromosome: row index out of range");
  }
  return owner_->trans_at(letter).row(row);
}

void validate(const GeneticConfig& cfg, Eigen::Index n) {
  if (cfg.stochastic_mode &&
      cfg.mutation_row_sampler == MutationSampler::UniformUnit) {
    throw ConfigError(
        "uniform-unit mutation breaks row stochasticity; use the simplex "
        "sampler in stochastic mode");
  }
  if (cfg.crossover_row_count < 0 ||
      static_cast<Eigen::Index>(cfg.crossover_row_count) > n) {
    throw ConfigError("crossover_row_count must be in [0, n]");
  }
}

WeightedAutomaton duplicate(const WeightedAutomaton& a) { return a; }

std::pair<WeightedAutomaton, WeightedAutomaton> crossover(
    const WeightedAutomaton& a, const WeightedAutomaton& b,
    const std::vector<Eigen::Index>& rows) {
  if (a.alphabet() != b.alphabet() || a.state_count() != b.state_count() ||
      a.semiring() != b.semiring()) {
    throw ComparabilityError("crossover requires shape-homogeneous parents");
  }
  const Eigen::Index n = a.state_count();
  for (Eigen::Index r : rows) {
    if (r < 0 || r >= n) {
      throw ParameterError("crossover row index out of range");
    }
  }
  std::vector<Eigen::MatrixXd> ta = a.trans();
  std::vector<Eigen::MatrixXd> tb = b.trans();
  for (std::size_t l = 0; l < ta.size(); ++l) {
    for (Eigen::Index r : rows) ta[l].row(r).swap(tb[l].row(r));
  }
  return {WeightedAutomaton(a.semiring(), a.alphabet(), a.entry(), a.final(),
                            std::move(ta)),
          WeightedAutomaton(b.semiring(), b.alphabet(), b.entry(), b.final(),
                            std::move(tb))};
}

namespace {

Eigen::RowVectorXd sample_row(SemiringKind kind, MutationSampler sampler,
                              const Eigen::RowVectorXd& old_row,
                              std::mt19937_64& rng) {
  const Eigen::Index n = old_row.size();
  if (sampler == MutationSampler::None) return old_row;
  Eigen::RowVectorXd row(n);
  if (kind == SemiringKind::Boolean) {
    std::uniform_int_distribution<int> coin(0, 1);
    for (Eigen::Index i = 0; i < n; ++i) row(i) = coin(rng);
    return row;
  }
  if (sampler == MutationSampler::Simplex) {
    // Normalized i.i.d. exponentials are uniform on the simplex.
    for (Eigen::Index i = 0; i < n; ++i) {
      row(i) = -std::log(1.0 - uniform01(rng));
    }
    row /= row.sum();
    return row;
  }
  for (Eigen::Index i = 0; i < n; ++i) row(i) = uniform01(rng);
  return row;
}

/// Draw order: row count/mask first, then indices; callers rely on this
/// being stable for reproducibility.
std::vector<Eigen::Index> draw_crossover_rows(const GeneticConfig& cfg,
                                              Eigen::Index n,
                                              std::mt19937_64& rng) {
  std::vector<Eigen::Index> rows;
  if (cfg.crossover_row_count > 0) {
    std::vector<Eigen::Index> all(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    // Partial Fisher-Yates: the first c entries are a uniform c-subset.
    for (int i = 0; i < cfg.crossover_row_count; ++i) {
      std::uniform_int_distribution<Eigen::Index> pick(i, n - 1);
      std::swap(all[static_cast<std::size_t>(i)],
                all[static_cast<std::size_t>(pick(rng))]);
    }
    rows.assign(all.begin(), all.begin() + cfg.crossover_row_count);
    std::sort(rows.begin(), rows.end());
    return rows;
  }
  if (n == 1) return {0};
  // Uniform nonempty proper subset via per-row coins with rejection.
  std::uniform_int_distribution<int> coin(0, 1);
  while (true) {
    rows.clear();
    for (Eigen::Index r = 0; r < n; ++r) {
      if (coin(rng) == 1) rows.push_back(r);
    }
    if (!rows.empty() && static_cast<Eigen::Index>(rows.size()) < n) {
      return rows;
    }
  }
}

}  // namespace

WeightedAutomaton mutate(const WeightedAutomaton& a, const GeneticConfig& cfg,
                         std::mt19937_64& rng) {
  validate(cfg, a.state_count());
  std::vector<Eigen::MatrixXd> trans = a.trans();
  std::uniform_int_distribution<Eigen::Index> pick_row(0, a.state_count() - 1);
  for (auto& m : trans) {
    Eigen::Index r = pick_row(rng);
    m.row(r) = sample_row(a.semiring(), cfg.mutation_row_sampler, m.row(r), rng);
  }
  return WeightedAutomaton(a.semiring(), a.alphabet(), a.entry(), a.final(),
                           std::move(trans));
}

Population evolve_generation(const Population& pop, const FitnessFn& fitness,
                             const GeneticConfig& cfg,
                             std::vector<PairTrace>* trace) {
  const std::size_t size = pop.members.size();
  if (size < 2 || size % 2 != 0) {
    throw ConfigError("population size must be even and >= 2");
  }
  validate(cfg, pop.members.front().state_count());

  std::vector<int> perm(size);
  for (std::size_t i = 0; i < size; ++i) perm[i] = static_cast<int>(i);
  {
    auto pairing_rng =
        substream(cfg.rng_seed, stream::kPairing,
                  static_cast<std::uint64_t>(pop.generation));
    std::shuffle(perm.begin(), perm.end(), pairing_rng);
  }

  Population next;
  next.members = pop.members;
  next.generation = pop.generation + 1;
  if (trace) trace->clear();

  for (std::size_t pair = 0; pair < size / 2; ++pair) {
    const int slot_a = perm[2 * pair];
    const int slot_b = perm[2 * pair + 1];
    const WeightedAutomaton& parent_a = pop.members[static_cast<std::size_t>(slot_a)];
    const WeightedAutomaton& parent_b = pop.members[static_cast<std::size_t>(slot_b)];

    auto rng = substream(cfg.rng_seed, stream::kPair,
                         static_cast<std::uint64_t>(pop.generation),
                         static_cast<std::uint64_t>(pair));
    auto rows = draw_crossover_rows(cfg, parent_a.state_count(), rng);
    auto [child_a, child_b] =
        crossover(duplicate(parent_a), duplicate(parent_b), rows);
    child_a = mutate(child_a, cfg, rng);
    child_b = mutate(child_b, cfg, rng);

    const WeightedAutomaton* quad[4] = {&parent_a, &parent_b, &child_a,
                                        &child_b};
    const int slot_of[4] = {slot_a, slot_b, slot_a, slot_b};
    std::array<double, 4> fit{};
    for (int i = 0; i < 4; ++i) {
      fit[static_cast<std::size_t>(i)] = fitness(*quad[i], slot_of[i], rng);
      if (std::isnan(fit[static_cast<std::size_t>(i)])) {
        throw ParameterError("fitness returned NaN");
      }
    }

    // Candidate order implements the tie-break: stable sort keeps the
    // preferred group in front on equal fitness.
    std::array<int, 4> order =
        cfg.selection_tiebreak == SelectionTiebreak::PreferParents
            ? std::array<int, 4>{0, 1, 2, 3}
            : std::array<int, 4>{2, 3, 0, 1};
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return fit[static_cast<std::size_t>(x)] > fit[static_cast<std::size_t>(y)];
    });

    next.members[static_cast<std::size_t>(slot_a)] =
        *quad[order[0]];
    next.members[static_cast<std::size_t>(slot_b)] =
        *quad[order[1]];

    if (trace) {
      PairTrace t;
      t.slot_a = slot_a;
      t.slot_b = slot_b;
      t.fitness = fit;
      t.survivors = {order[0], order[1]};
      trace->push_back(t);
    }
  }
  return next;
}

}  // namespace genaut
