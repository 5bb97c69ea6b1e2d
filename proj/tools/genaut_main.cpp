#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "genaut/emergence.hpp"
#include "genaut/io.hpp"
#include "genaut/ipd.hpp"
#include "genaut/rng.hpp"
#include "genaut/scenarios.hpp"
#include "genaut/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// formatting

std::string fmt_g17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// config plumbing: flags override file values

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw genaut::ConfigError("cannot open config \"" + path + "\"");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw genaut::ConfigError("config \"" + path + "\" is not valid JSON: " +
                              e.what());
  }
  if (!j.is_object()) {
    throw genaut::ConfigError("config \"" + path + "\" must be a JSON object");
  }
  return j;
}

void reject_unknown(const json& j, std::initializer_list<const char*> keys) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* k : keys) {
      if (key == k) {
        known = true;
        break;
      }
    }
    if (!known) throw genaut::ConfigError("unknown config key \"" + key + "\"");
  }
}

template <typename T>
T pick(const CLI::Option* opt, const T& flag_value, const json& cfg,
       const char* key, const T& fallback) {
  if (opt != nullptr && opt->count() > 0) return flag_value;
  if (cfg.contains(key)) {
    try {
      return cfg.at(key).get<T>();
    } catch (const json::exception&) {
      throw genaut::ConfigError(std::string("config key \"") + key +
                                "\" has the wrong type");
    }
  }
  return fallback;
}

genaut::SelectionTiebreak tiebreak_from_name(const std::string& name) {
  if (name == "prefer_parents") return genaut::SelectionTiebreak::PreferParents;
  if (name == "prefer_children") {
    return genaut::SelectionTiebreak::PreferChildren;
  }
  throw genaut::ConfigError(
      "selection_tiebreak must be prefer_parents or prefer_children");
}

const char* tiebreak_name(genaut::SelectionTiebreak t) {
  return t == genaut::SelectionTiebreak::PreferParents ? "prefer_parents"
                                                       : "prefer_children";
}

// ---------------------------------------------------------------------------
// output files

void write_outputs(const fs::path& out_dir, const json& run,
                   const std::string& stats_csv,
                   const std::vector<genaut::WeightedAutomaton>& members) {
  fs::create_directories(out_dir / "population");
  genaut::write_text_atomic(out_dir / "run.json", run.dump(2) + "\n");
  genaut::write_text_atomic(out_dir / "stats.csv", stats_csv);
  for (std::size_t i = 0; i < members.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "member_%03zu.json", i);
    genaut::save_automaton(members[i], out_dir / "population" / name);
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

// ---------------------------------------------------------------------------
// play

int cmd_play(const std::string& id_a, const std::string& id_b, int rounds,
             bool has_seed, std::uint64_t seed, const std::string& out_dir) {
  genaut::StrategyAutomaton a = genaut::strategy_from_id(id_a);
  genaut::StrategyAutomaton b = genaut::strategy_from_id(id_b);
  if (!has_seed &&
      (!genaut::is_deterministic(a) || !genaut::is_deterministic(b))) {
    throw genaut::ConfigError("--seed is required with stochastic strategies");
  }
  if (rounds < 1) throw genaut::ConfigError("--rounds must be >= 1");

  auto rng = genaut::substream(seed, genaut::stream::kPair, 0, 0);
  genaut::MatchResult result = genaut::play_match(a, b, rounds, rng);

  std::printf("round  %s  %s\n", id_a.c_str(), id_b.c_str());
  for (std::size_t t = 0; t < result.history.size(); ++t) {
    std::printf("%5zu  %c  %c\n", t + 1,
                genaut::action_symbol(result.history[t].first),
                genaut::action_symbol(result.history[t].second));
  }
  std::printf("totals: %s %s\n", fmt_g17(result.payoff_a).c_str(),
              fmt_g17(result.payoff_b).c_str());

  if (!out_dir.empty()) {
    json run;
    run["command"] = "play";
    run["version"] = genaut::kVersion;
    run["config"] = {{"strategy_a", id_a},
                     {"strategy_b", id_b},
                     {"rounds", rounds},
                     {"seed", seed}};
    std::vector<std::string> history;
    history.reserve(result.history.size());
    for (auto [own, other] : result.history) {
      history.push_back(std::string() + genaut::action_symbol(own) +
                        genaut::action_symbol(other));
    }
    run["history"] = history;
    run["payoff_a"] = result.payoff_a;
    run["payoff_b"] = result.payoff_b;
    fs::create_directories(out_dir);
    genaut::write_text_atomic(fs::path(out_dir) / "run.json",
                              run.dump(2) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// evolve-ipd

int cmd_evolve_ipd(const json& cfg_file, const CLI::Option* opt_seed,
                   std::uint64_t seed, const CLI::Option* opt_pop, int pop,
                   const CLI::Option* opt_gens, int gens,
                   const CLI::Option* opt_rounds, int rounds,
                   const CLI::Option* opt_s0, const std::string& s0,
                   const std::string& out_dir) {
  reject_unknown(cfg_file, {"pop", "generations", "rounds", "repeats", "s0",
                            "fitness_mode", "seed", "crossover_row_count",
                            "selection_tiebreak"});
  genaut::IpdRunConfig cfg;
  cfg.pop_size = pick(opt_pop, pop, cfg_file, "pop", 32);
  cfg.generations = pick(opt_gens, gens, cfg_file, "generations", 60);
  cfg.rounds = pick(opt_rounds, rounds, cfg_file, "rounds", 64);
  cfg.repeats = pick<int>(nullptr, 0, cfg_file, "repeats", 1);
  cfg.s0_id = pick(opt_s0, s0, cfg_file, "s0", std::string("tft"));
  std::string mode = pick<std::string>(nullptr, "", cfg_file, "fitness_mode",
                                       "sampled");
  if (mode == "sampled") {
    cfg.fitness_mode = genaut::FitnessMode::Sampled;
  } else if (mode == "expected") {
    cfg.fitness_mode = genaut::FitnessMode::Expected;
  } else {
    throw genaut::ConfigError("fitness_mode must be sampled or expected");
  }
  if (opt_seed->count() == 0 && !cfg_file.contains("seed")) {
    throw genaut::ConfigError("evolution commands require --seed");
  }
  cfg.genetic.rng_seed = pick(opt_seed, seed, cfg_file, "seed",
                              std::uint64_t{0});
  cfg.genetic.crossover_row_count =
      pick<int>(nullptr, 0, cfg_file, "crossover_row_count", 0);
  cfg.genetic.selection_tiebreak = tiebreak_from_name(pick<std::string>(
      nullptr, "", cfg_file, "selection_tiebreak", "prefer_parents"));
  if (out_dir.empty()) {
    throw genaut::ConfigError("evolve-ipd requires --out");
  }

  Timer timer;
  genaut::IpdRunRecord record = genaut::evolve_ipd(cfg);

  json run;
  run["command"] = "evolve-ipd";
  run["version"] = genaut::kVersion;
  run["config"] = {
      {"pop", cfg.pop_size},
      {"generations", cfg.generations},
      {"rounds", cfg.rounds},
      {"repeats", cfg.repeats},
      {"s0", cfg.s0_id},
      {"fitness_mode", mode},
      {"seed", cfg.genetic.rng_seed},
      {"crossover_row_count", cfg.genetic.crossover_row_count},
      {"selection_tiebreak", tiebreak_name(cfg.genetic.selection_tiebreak)}};
  json stats = json::array();
  std::string csv = "generation,fit_min,fit_mean,fit_max,coop_rate\n";
  for (const auto& row : record.stats) {
    stats.push_back({{"generation", row.generation},
                     {"fit_min", genaut::fitness_to_json(row.fit_min)},
                     {"fit_mean", genaut::fitness_to_json(row.fit_mean)},
                     {"fit_max", genaut::fitness_to_json(row.fit_max)},
                     {"coop_rate", row.coop_rate},
                     {"param_means", row.param_means}});
    csv += std::to_string(row.generation) + "," + fmt_g17(row.fit_min) + "," +
           fmt_g17(row.fit_mean) + "," + fmt_g17(row.fit_max) + "," +
           fmt_g17(row.coop_rate) + "\n";
  }
  run["stats"] = std::move(stats);
  json pop_json = json::array();
  for (const auto& m : record.final_population.members) {
    pop_json.push_back(genaut::to_json(m));
  }
  run["final_population"] = std::move(pop_json);

  write_outputs(out_dir, run, csv, record.final_population.members);

  const auto& last = record.stats.back();
  std::printf("generation %d: fit_min=%s fit_mean=%s fit_max=%s coop_rate=%s\n",
              last.generation, fmt_g17(last.fit_min).c_str(),
              fmt_g17(last.fit_mean).c_str(), fmt_g17(last.fit_max).c_str(),
              fmt_g17(last.coop_rate).c_str());
  std::printf("outputs: %s\n", out_dir.c_str());
  std::printf("wall_clock_s: %.3f\n", timer.seconds());
  return 0;
}

// ---------------------------------------------------------------------------
// emerge

genaut::NeighborhoodSpec neighborhood_from_json(const json& j) {
  genaut::NeighborhoodSpec spec;
  if (j.is_null()) return spec;
  if (!j.is_object() || !j.contains("kind")) {
    throw genaut::ConfigError("neighborhood needs a \"kind\"");
  }
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "all") {
    reject_unknown(j, {"kind"});
    spec.kind = genaut::NeighborhoodSpec::Kind::All;
  } else if (kind == "spatial") {
    reject_unknown(j, {"kind", "radius"});
    spec.kind = genaut::NeighborhoodSpec::Kind::Spatial;
    if (!j.contains("radius")) {
      throw genaut::ConfigError("spatial neighborhood needs \"radius\"");
    }
    spec.radius = j.at("radius").get<double>();
  } else if (kind == "graph") {
    reject_unknown(j, {"kind", "adjacency"});
    spec.kind = genaut::NeighborhoodSpec::Kind::Graph;
    if (!j.contains("adjacency")) {
      throw genaut::ConfigError("graph neighborhood needs \"adjacency\"");
    }
    spec.adjacency = j.at("adjacency").get<std::vector<std::vector<int>>>();
  } else {
    throw genaut::ConfigError("neighborhood kind must be all, spatial, graph");
  }
  return spec;
}

std::vector<genaut::Agent> agents_from_config(const json& cfg,
                                              std::uint64_t seed) {
  const bool has_agents = cfg.contains("agents");
  const bool has_init = cfg.contains("init");
  if (has_agents == has_init) {
    throw genaut::ConfigError(
        "emerge config needs exactly one of \"agents\" or \"init\"");
  }
  std::vector<genaut::Agent> agents;
  if (has_agents) {
    const json& arr = cfg.at("agents");
    if (!arr.is_array() || arr.empty()) {
      throw genaut::ConfigError("\"agents\" must be a nonempty array");
    }
    for (const json& a : arr) {
      reject_unknown(a, {"id", "behavior", "position"});
      if (!a.contains("id") || !a.contains("behavior")) {
        throw genaut::ConfigError("each agent needs \"id\" and \"behavior\"");
      }
      genaut::Agent agent{a.at("id").get<std::string>(),
                          genaut::automaton_from_json(a.at("behavior")),
                          std::nullopt};
      if (a.contains("position")) {
        auto p = a.at("position").get<std::vector<double>>();
        if (p.size() != 2) {
          throw genaut::ConfigError("agent position must be [x, y]");
        }
        agent.position = Eigen::Vector2d(p[0], p[1]);
      }
      agents.push_back(std::move(agent));
    }
    return agents;
  }
  const json& init = cfg.at("init");
  reject_unknown(init, {"kind", "count", "centers", "noise"});
  if (init.value("kind", "") != std::string("strategy_clusters")) {
    throw genaut::ConfigError("init kind must be strategy_clusters");
  }
  return genaut::clustered_strategy_agents(init.value("count", 32),
                                           init.value("centers", 2),
                                           init.value("noise", 0.05), seed);
}

int cmd_emerge(const json& cfg_file, const CLI::Option* opt_seed,
               std::uint64_t seed, const CLI::Option* opt_gens, int gens,
               const CLI::Option* opt_alpha, double alpha,
               const CLI::Option* opt_epsilon, double epsilon,
               const std::string& out_dir) {
  reject_unknown(cfg_file,
                 {"generations", "alpha", "epsilon", "seed", "neighborhood",
                  "agents", "init", "crossover_row_count",
                  "selection_tiebreak", "problem", "compose"});
  genaut::EmergeRunConfig cfg;
  cfg.generations = pick(opt_gens, gens, cfg_file, "generations", 40);
  cfg.alpha = pick(opt_alpha, alpha, cfg_file, "alpha", 2.0);
  cfg.epsilon = pick(opt_epsilon, epsilon, cfg_file, "epsilon", 0.1);
  if (opt_seed->count() == 0 && !cfg_file.contains("seed")) {
    throw genaut::ConfigError("evolution commands require --seed");
  }
  std::uint64_t run_seed = pick(opt_seed, seed, cfg_file, "seed",
                                std::uint64_t{0});
  cfg.genetic.rng_seed = run_seed;
  cfg.genetic.crossover_row_count =
      pick<int>(nullptr, 0, cfg_file, "crossover_row_count", 0);
  cfg.genetic.selection_tiebreak = tiebreak_from_name(pick<std::string>(
      nullptr, "", cfg_file, "selection_tiebreak", "prefer_parents"));
  cfg.neighborhoods = neighborhood_from_json(
      cfg_file.contains("neighborhood") ? cfg_file.at("neighborhood") : json());
  if (out_dir.empty()) throw genaut::ConfigError("emerge requires --out");

  std::vector<genaut::Agent> agents = agents_from_config(cfg_file, run_seed);

  json problem_echo;
  if (cfg_file.contains("problem")) {
    const json& p = cfg_file.at("problem");
    reject_unknown(p, {"kind", "s0", "rounds", "repeats"});
    if (p.value("kind", "") != std::string("ipd_expected")) {
      throw genaut::ConfigError("problem kind must be ipd_expected");
    }
    std::string s0_id = p.value("s0", "tft");
    int rounds = p.value("rounds", 64);
    int repeats = p.value("repeats", 1);
    genaut::StrategyAutomaton s0 = genaut::strategy_from_id(s0_id);
    cfg.problem_fitness = [s0, rounds,
                           repeats](const genaut::WeightedAutomaton& a) {
      return genaut::expected_tournament_fitness(genaut::StrategyAutomaton(a),
                                                 s0, rounds, repeats);
    };
    problem_echo = {{"kind", "ipd_expected"},
                    {"s0", s0_id},
                    {"rounds", rounds},
                    {"repeats", repeats}};
  }
  std::string compose_mode = "product";
  if (cfg_file.contains("compose")) {
    const json& c = cfg_file.at("compose");
    reject_unknown(c, {"mode", "weight"});
    compose_mode = c.value("mode", "product");
    if (compose_mode == "product") {
      cfg.compose_mode = genaut::ComposeMode::Product;
    } else if (compose_mode == "weighted_sum") {
      cfg.compose_mode = genaut::ComposeMode::WeightedSum;
    } else {
      throw genaut::ConfigError("compose mode must be product or weighted_sum");
    }
    cfg.compose_weight = c.value("weight", 0.5);
  }

  Timer timer;
  genaut::EmergeRunRecord record = genaut::evolve_emergent(agents, cfg);

  json run;
  run["command"] = "emerge";
  run["version"] = genaut::kVersion;
  json nbhd_echo;
  switch (cfg.neighborhoods.kind) {
    case genaut::NeighborhoodSpec::Kind::All:
      nbhd_echo = {{"kind", "all"}};
      break;
    case genaut::NeighborhoodSpec::Kind::Spatial:
      nbhd_echo = {{"kind", "spatial"}, {"radius", cfg.neighborhoods.radius}};
      break;
    case genaut::NeighborhoodSpec::Kind::Graph:
      nbhd_echo = {{"kind", "graph"},
                   {"adjacency", cfg.neighborhoods.adjacency}};
      break;
  }
  run["config"] = {
      {"generations", cfg.generations},
      {"alpha", cfg.alpha},
      {"epsilon", cfg.epsilon},
      {"seed", run_seed},
      {"neighborhood", nbhd_echo},
      {"crossover_row_count", cfg.genetic.crossover_row_count},
      {"selection_tiebreak", tiebreak_name(cfg.genetic.selection_tiebreak)}};
  if (!problem_echo.is_null()) {
    run["config"]["problem"] = problem_echo;
    run["config"]["compose"] = {{"mode", compose_mode},
                                {"weight", cfg.compose_weight}};
  }

  json stats = json::array();
  std::string csv =
      "generation,fit_min,fit_mean,fit_max,mean_within_nbhd_dist,n_clusters\n";
  for (const auto& row : record.stats) {
    stats.push_back(
        {{"generation", row.generation},
         {"fit_min", genaut::fitness_to_json(row.fit_min)},
         {"fit_mean", genaut::fitness_to_json(row.fit_mean)},
         {"fit_max", genaut::fitness_to_json(row.fit_max)},
         {"mean_within_nbhd_dist", row.mean_within_nbhd_dist},
         {"n_clusters", row.n_clusters}});
    csv += std::to_string(row.generation) + "," + fmt_g17(row.fit_min) + "," +
           fmt_g17(row.fit_mean) + "," + fmt_g17(row.fit_max) + "," +
           fmt_g17(row.mean_within_nbhd_dist) + "," +
           std::to_string(row.n_clusters) + "\n";
  }
  run["stats"] = std::move(stats);

  json agents_json = json::array();
  std::vector<genaut::WeightedAutomaton> members;
  for (const auto& agent : record.final_agents) {
    json a;
    a["id"] = agent.id;
    a["behavior"] = genaut::to_json(agent.behavior);
    if (agent.position) {
      a["position"] = {agent.position->x(), agent.position->y()};
    }
    agents_json.push_back(std::move(a));
    members.push_back(agent.behavior);
  }
  run["final_population"] = std::move(agents_json);
  json clusters = json::array();
  for (const auto& cluster : record.final_clusters) {
    json ids = json::array();
    for (int i : cluster) {
      ids.push_back(record.final_agents[static_cast<std::size_t>(i)].id);
    }
    clusters.push_back(std::move(ids));
  }
  run["final_clusters"] = std::move(clusters);

  write_outputs(out_dir, run, csv, members);

  const auto& last = record.stats.back();
  std::printf(
      "generation %d: fit_mean=%s mean_within_nbhd_dist=%s n_clusters=%d\n",
      last.generation, fmt_g17(last.fit_mean).c_str(),
      fmt_g17(last.mean_within_nbhd_dist).c_str(), last.n_clusters);
  std::printf("outputs: %s\n", out_dir.c_str());
  std::printf("wall_clock_s: %.3f\n", timer.seconds());
  return 0;
}

// ---------------------------------------------------------------------------
// distance / eval

int cmd_distance(const std::string& file_a, const std::string& file_b,
                 double alpha, int max_len) {
  genaut::WeightedAutomaton a = genaut::load_automaton(file_a);
  genaut::WeightedAutomaton b = genaut::load_automaton(file_b);
  std::printf("automaton_distance: %s\n",
              fmt_g17(genaut::automaton_distance(a, b, alpha)).c_str());
  std::printf("behavior_gap: %s\n",
              fmt_g17(genaut::behavior_gap(a, b, max_len, alpha)).c_str());
  return 0;
}

int cmd_eval(const std::string& file, double alpha) {
  genaut::WeightedAutomaton a = genaut::load_automaton(file);
  genaut::EvaluationMatrix m = genaut::evaluate(a);
  (void)alpha;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::printf("%s%s", c == 0 ? "" : " ", fmt_g17(m(r, c)).c_str());
    }
    std::printf("\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genaut: weighted automata, evolutionary strategy search, and "
               "behavioral emergence experiments"};
  app.set_version_flag("--version", genaut::kVersion);
  app.require_subcommand(1);

  // common option storage
  std::string config_path, out_dir, s0_id = "tft";
  std::uint64_t seed = 0;
  int rounds = 0, generations = 0, pop = 0, max_len = 6;
  double alpha = 2.0, epsilon = 0.1;

  auto* play = app.add_subcommand("play", "Play one match between two named "
                                          "strategies and print the history");
  std::string id_a, id_b;
  play->add_option("a", id_a, "first strategy id")->required();
  play->add_option("b", id_b, "second strategy id")->required();
  auto* play_rounds = play->add_option("--rounds", rounds, "rounds to play");
  auto* play_seed = play->add_option("--seed", seed, "master RNG seed");
  play->add_option("--out", out_dir, "directory for run.json");

  auto* ipd = app.add_subcommand("evolve-ipd",
                                 "Evolve strategy automata against a fixed "
                                 "opponent and record statistics");
  ipd->add_option("--config", config_path, "JSON config file");
  auto* ipd_seed = ipd->add_option("--seed", seed, "master RNG seed");
  auto* ipd_pop = ipd->add_option("--pop", pop, "population size (even)");
  auto* ipd_gens =
      ipd->add_option("--generations", generations, "generations to run");
  auto* ipd_rounds = ipd->add_option("--rounds", rounds, "rounds per match");
  auto* ipd_s0 = ipd->add_option("--s0", s0_id, "opponent strategy id");
  ipd->add_option("--out", out_dir, "output directory")->required();

  auto* emerge = app.add_subcommand("emerge",
                                    "Evolve agent behaviors under the "
                                    "neighborhood-similarity fitness");
  emerge->add_option("--config", config_path, "JSON config file")->required();
  auto* em_seed = emerge->add_option("--seed", seed, "master RNG seed");
  auto* em_gens =
      emerge->add_option("--generations", generations, "generations to run");
  auto* em_alpha = emerge->add_option("--alpha", alpha, "norm exponent");
  auto* em_eps =
      emerge->add_option("--epsilon", epsilon, "aggregation threshold");
  emerge->add_option("--out", out_dir, "output directory")->required();

  auto* distance = app.add_subcommand(
      "distance", "Print representation distance and truncated behavior gap "
                  "between two automaton files");
  std::string file_a, file_b;
  distance->add_option("a", file_a, "first automaton JSON file")->required();
  distance->add_option("b", file_b, "second automaton JSON file")->required();
  distance->add_option("--alpha", alpha, "norm exponent");
  distance->add_option("--max-len", max_len, "behavior truncation length");

  auto* eval = app.add_subcommand(
      "eval", "Print the acyclic-successful-path evaluation matrix of an "
              "automaton file");
  std::string eval_file;
  eval->add_option("file", eval_file, "automaton JSON file")->required();
  eval->add_option("--alpha", alpha, "unused; kept for flag uniformity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (play->parsed()) {
      return cmd_play(id_a, id_b, play_rounds->count() ? rounds : 10,
                      play_seed->count() > 0, seed, out_dir);
    }
    if (ipd->parsed()) {
      return cmd_evolve_ipd(load_config(config_path), ipd_seed, seed, ipd_pop,
                            pop, ipd_gens, generations, ipd_rounds, rounds,
                            ipd_s0, s0_id, out_dir);
    }
    if (emerge->parsed()) {
      return cmd_emerge(load_config(config_path), em_seed, seed, em_gens,
                        generations, em_alpha, alpha, em_eps, epsilon,
                        out_dir);
    }
    if (distance->parsed()) return cmd_distance(file_a, file_b, alpha, max_len);
    if (eval->parsed()) return cmd_eval(eval_file, alpha);
  } catch (const genaut::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
