#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "genaut/io.hpp"
#include "genaut/ipd.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli_path() {
  if (const char* env = std::getenv("GENAUT_CLI")) return env;
#ifdef GENAUT_CLI_DEFAULT
  return GENAUT_CLI_DEFAULT;
#else
  return "genaut";
#endif
}

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved

  bool contains(const std::string& needle) const {
    return output.find(needle) != std::string::npos;
  }
};

CliResult run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

/// Fresh empty directory under the system temp dir; reused names are wiped.
fs::path fresh_dir(const std::string& tag) {
  fs::path p = fs::temp_directory_path() /
               ("genaut_cli_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

json read_json(const fs::path& p) { return json::parse(read_file(p)); }

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

int line_count(const std::string& text) {
  int lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

}  // namespace

TEST_CASE("play prints deterministic match totals") {
  auto r = run_cli("play tft vindictive");
  CHECK(r.exit_code == 0);
  CHECK(r.contains("totals: 30 30"));

  r = run_cli("play alld allc --rounds 10");
  CHECK(r.exit_code == 0);
  CHECK(r.contains("totals: 50 0"));

  r = run_cli("play alld alld --rounds 10");
  CHECK(r.exit_code == 0);
  CHECK(r.contains("totals: 10 10"));
}

TEST_CASE("play demands a seed only for stochastic strategies") {
  auto r = run_cli("play uniform tft --rounds 4");
  CHECK(r.exit_code == 2);
  CHECK(r.contains("--seed"));
  r = run_cli("play uniform tft --rounds 4 --seed 5");
  CHECK(r.exit_code == 0);
}

TEST_CASE("play writes a run record when asked") {
  fs::path dir = fresh_dir("play");
  auto r = run_cli("play tft alld --rounds 10 --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  json run = read_json(dir / "run.json");
  CHECK(run.at("command") == "play");
  CHECK(run.at("payoff_a") == 9.0);
  CHECK(run.at("payoff_b") == 14.0);
  CHECK(run.at("config").at("rounds") == 10);
  CHECK(run.at("config").at("strategy_a") == "tft");
  REQUIRE(run.at("history").size() == 10);
  CHECK(run.at("history")[0] == "CD");
  CHECK(run.at("history")[1] == "DD");
  fs::remove_all(dir);
}

TEST_CASE("bad invocations exit with code 2") {
  CHECK(run_cli("play nope tft").exit_code == 2);
  CHECK(run_cli("play tft tft --rounds 0").exit_code == 2);
  CHECK(run_cli("play tft").exit_code == 2);           // missing positional
  CHECK(run_cli("play tft tft --bogus 1").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);                   // subcommand required
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("help and version exit cleanly") {
  auto r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.contains("0.1.0"));
  r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.contains("play"));
  CHECK(r.contains("evolve-ipd"));
}

TEST_CASE("evolve-ipd writes the documented output tree") {
  fs::path dir = fresh_dir("ipd");
  auto r = run_cli("evolve-ipd --seed 3 --pop 4 --generations 2 --rounds 8 --out " +
                   dir.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.contains("wall_clock_s"));

  std::string csv = read_file(dir / "stats.csv");
  CHECK(csv.rfind("generation,fit_min,fit_mean,fit_max,coop_rate\n", 0) == 0);
  CHECK(line_count(csv) == 4);  // header + generations 0..2

  json run = read_json(dir / "run.json");
  CHECK(run.at("command") == "evolve-ipd");
  CHECK(run.at("config").at("pop") == 4);
  CHECK(run.at("config").at("generations") == 2);
  CHECK(run.at("config").at("rounds") == 8);
  CHECK(run.at("config").at("seed") == 3);
  CHECK(run.at("stats").size() == 3);
  CHECK(run.at("final_population").size() == 4);
  // wall-clock time goes to the console, never into the record
  CHECK(run.dump().find("wall_clock") == std::string::npos);

  for (int i = 0; i < 4; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "member_%03d.json", i);
    genaut::WeightedAutomaton m =
        genaut::load_automaton(dir / "population" / name);
    CHECK(genaut::is_stochastic(m));
    CHECK(m.alphabet() == "CD");
  }
  fs::remove_all(dir);
}

TEST_CASE("evolve-ipd validates its flags") {
  fs::path dir = fresh_dir("ipdbad");
  CHECK(run_cli("evolve-ipd --pop 4 --generations 1 --out " + dir.string())
            .exit_code == 2);  // no seed
  CHECK(run_cli("evolve-ipd --seed 1 --pop 4 --generations 1").exit_code == 2);
  CHECK(run_cli("evolve-ipd --seed 1 --pop 5 --generations 1 --out " +
                dir.string())
            .exit_code == 2);  // odd population
  CHECK(run_cli("evolve-ipd --seed 1 --pop 4 --generations 1 --s0 nope --out " +
                dir.string())
            .exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("config files feed evolve-ipd and flags override them") {
  fs::path dir = fresh_dir("ipdcfg");
  fs::path cfg = dir / "cfg.json";
  write_file(cfg, R"({"pop": 4, "generations": 1, "rounds": 4, "seed": 9})");

  auto r = run_cli("evolve-ipd --config " + cfg.string() + " --out " +
                   (dir / "a").string());
  REQUIRE(r.exit_code == 0);
  json run = read_json(dir / "a" / "run.json");
  CHECK(run.at("config").at("pop") == 4);
  CHECK(run.at("config").at("seed") == 9);
  CHECK(run.at("config").at("rounds") == 4);

  r = run_cli("evolve-ipd --config " + cfg.string() + " --pop 6 --rounds 8 " +
              "--out " + (dir / "b").string());
  REQUIRE(r.exit_code == 0);
  run = read_json(dir / "b" / "run.json");
  CHECK(run.at("config").at("pop") == 6);
  CHECK(run.at("config").at("rounds") == 8);
  CHECK(run.at("final_population").size() == 6);
  fs::remove_all(dir);
}

TEST_CASE("unknown or malformed config content is rejected") {
  fs::path dir = fresh_dir("cfgbad");
  fs::path cfg = dir / "cfg.json";
  write_file(cfg, R"({"pops": 4, "seed": 1})");
  CHECK(run_cli("evolve-ipd --config " + cfg.string() + " --out " +
                (dir / "o").string())
            .exit_code == 2);
  write_file(cfg, "{not json");
  CHECK(run_cli("evolve-ipd --config " + cfg.string() + " --out " +
                (dir / "o").string())
            .exit_code == 2);
  write_file(cfg, R"({"fitness_mode": "magic", "seed": 1})");
  CHECK(run_cli("evolve-ipd --config " + cfg.string() + " --out " +
                (dir / "o").string())
            .exit_code == 2);
  CHECK(run_cli("evolve-ipd --config " + (dir / "absent.json").string() +
                " --out " + (dir / "o").string())
            .exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("identical seeds give byte-identical outputs") {
  fs::path dir = fresh_dir("det");
  std::string args = "evolve-ipd --seed 11 --pop 4 --generations 3 --rounds 8";
  REQUIRE(run_cli(args + " --out " + (dir / "a").string()).exit_code == 0);
  REQUIRE(run_cli(args + " --out " + (dir / "b").string()).exit_code == 0);
  CHECK(read_file(dir / "a" / "stats.csv") == read_file(dir / "b" / "stats.csv"));
  CHECK(read_file(dir / "a" / "run.json") == read_file(dir / "b" / "run.json"));
  CHECK(read_file(dir / "a" / "population" / "member_000.json") ==
        read_file(dir / "b" / "population" / "member_000.json"));
  fs::remove_all(dir);
}

TEST_CASE("emerge runs from a clustered-init config") {
  fs::path dir = fresh_dir("emerge");
  fs::path cfg = dir / "cfg.json";
  write_file(cfg, R"({
    "init": {"kind": "strategy_clusters", "count": 4, "centers": 2,
             "noise": 0.05},
    "neighborhood": {"kind": "all"}
  })");
  auto r = run_cli("emerge --config " + cfg.string() +
                   " --seed 2 --generations 2 --out " + (dir / "o").string());
  REQUIRE(r.exit_code == 0);

  std::string csv = read_file(dir / "o" / "stats.csv");
  CHECK(csv.rfind("generation,fit_min,fit_mean,fit_max,mean_within_nbhd_dist,"
                  "n_clusters\n",
                  0) == 0);
  CHECK(line_count(csv) == 4);

  json run = read_json(dir / "o" / "run.json");
  CHECK(run.at("command") == "emerge");
  CHECK(run.at("config").at("neighborhood").at("kind") == "all");
  CHECK(run.at("final_population").size() == 4);
  CHECK(run.at("final_population")[0].at("id") == "a000");
  CHECK(run.at("final_clusters").is_array());
  CHECK(run.dump().find("wall_clock") == std::string::npos);
  CHECK(fs::exists(dir / "o" / "population" / "member_003.json"));
  fs::remove_all(dir);
}

TEST_CASE("emerge accepts an explicit agent list") {
  fs::path dir = fresh_dir("emergeagents");
  json cfg;
  cfg["neighborhood"] = {{"kind", "all"}};
  cfg["agents"] = json::array();
  const double seeds[4] = {0.9, 0.8, 0.2, 0.1};
  for (int i = 0; i < 4; ++i) {
    json agent;
    agent["id"] = "g" + std::to_string(i);
    agent["behavior"] = genaut::to_json(
        genaut::build_strategy(
            {seeds[i], seeds[i], seeds[i], 1 - seeds[i], 1 - seeds[i], 0.5})
            .core());
    cfg["agents"].push_back(agent);
  }
  write_file(dir / "cfg.json", cfg.dump(2));
  auto r = run_cli("emerge --config " + (dir / "cfg.json").string() +
                   " --seed 4 --generations 1 --out " + (dir / "o").string());
  REQUIRE(r.exit_code == 0);
  json run = read_json(dir / "o" / "run.json");
  CHECK(run.at("final_population").size() == 4);
  CHECK(run.at("final_population")[2].at("id") == "g2");

  // odd agent count is rejected
  cfg["agents"].erase(3);
  write_file(dir / "cfg.json", cfg.dump(2));
  CHECK(run_cli("emerge --config " + (dir / "cfg.json").string() +
                " --seed 4 --generations 1 --out " + (dir / "o2").string())
            .exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("emerge rejects contradictory sources and unknown keys") {
  fs::path dir = fresh_dir("emergebad");
  write_file(dir / "both.json", R"({
    "init": {"kind": "strategy_clusters", "count": 4},
    "agents": []
  })");
  CHECK(run_cli("emerge --config " + (dir / "both.json").string() +
                " --seed 1 --out " + (dir / "o").string())
            .exit_code == 2);
  write_file(dir / "key.json", R"({
    "init": {"kind": "strategy_clusters", "count": 4},
    "neighbourhood": {"kind": "all"}
  })");
  CHECK(run_cli("emerge --config " + (dir / "key.json").string() +
                " --seed 1 --out " + (dir / "o").string())
            .exit_code == 2);
  write_file(dir / "nb.json", R"({
    "init": {"kind": "strategy_clusters", "count": 4},
    "neighborhood": {"kind": "ring"}
  })");
  CHECK(run_cli("emerge --config " + (dir / "nb.json").string() +
                " --seed 1 --out " + (dir / "o").string())
            .exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("distance prints both metrics for automaton files") {
  fs::path dir = fresh_dir("distance");
  genaut::save_automaton(genaut::make_tit_for_tat().core(), dir / "tft.json");
  genaut::save_automaton(genaut::make_uniform_random().core(),
                         dir / "uniform.json");
  genaut::save_automaton(
      genaut::build_strategy({1, 0.75, 1, 1, 1, 1}).core(), dir / "p2.json");

  // flipping p2 by 0.25 moves two matrix entries by 0.25 each
  auto r = run_cli("distance " + (dir / "tft.json").string() + " " +
                   (dir / "p2.json").string() + " --alpha 1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.contains("automaton_distance: 0.5\n"));

  r = run_cli("distance " + (dir / "tft.json").string() + " " +
              (dir / "uniform.json").string() + " --alpha 1 --max-len 0");
  REQUIRE(r.exit_code == 0);
  CHECK(r.contains("automaton_distance: 6\n"));
  // empty-word weights are 1 (tft) and 0.5 (uniform)
  CHECK(r.contains("behavior_gap: 0.5\n"));

  CHECK(run_cli("distance " + (dir / "tft.json").string() + " " +
                (dir / "absent.json").string())
            .exit_code == 2);
  write_file(dir / "broken.json", "{\"semiring\": \"real\"}");
  CHECK(run_cli("distance " + (dir / "tft.json").string() + " " +
                (dir / "broken.json").string())
            .exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("eval prints the evaluation matrix") {
  fs::path dir = fresh_dir("eval");
  genaut::save_automaton(genaut::make_tit_for_tat().core(), dir / "tft.json");
  auto r = run_cli("eval " + (dir / "tft.json").string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.output == "1 0\n0 0\n");
  fs::remove_all(dir);
}
