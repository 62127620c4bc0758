#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pommer/harness.hpp"

// Tournament front end. `arena run` plays one seeded batch, `arena sweep-po`
// repeats it across vision 0..4, `arena replay` re-simulates a recorded game
// and verifies it. Exit codes: 0 ok, 2 configuration error, 3 replay mismatch.

namespace {

using pommer::harness::TournamentConfig;

struct CliOptions {
  std::string mode = "ffa";
  std::string agents = "femcts,mcts,rhea,osla";
  std::string seeds = "10";
  int games_per_seed = 5;
  std::string vision = "full";
  double budget_ms = 40.0;
  long budget_iters = 0;
  int pop_size = 10;
  int elites = 4;
  int tournament = 2;
  int rollouts_per_individual = 4;
  int nea = 2;
  std::string feature_set = "all8";
  double mutation_strength = 0.001;
  double mutation_prob = 0.2;
  std::string mutation_style = "shared";
  std::string seed_in;
  std::string seed_out;
  std::uint64_t master_seed = 1;
  std::string out_dir = "out";
  int jobs = 1;
  int max_ticks = 800;
  bool no_rotation = false;
  bool no_replays = false;
  bool quiet = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// "--seeds 10" means seeds 1..10; "--seeds 3,7,42" is an explicit list.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  const auto parts = split(text, ',');
  if (parts.size() == 1 && parts[0].find(',') == std::string::npos) {
    const auto count = std::stoull(parts[0]);
    if (count == 0) throw pommer::ConfigError("--seeds count must be positive");
    if (count > 100000) throw pommer::ConfigError("--seeds count too large");
    for (std::uint64_t s = 1; s <= count; ++s) seeds.push_back(s);
    return seeds;
  }
  for (const auto& p : parts) seeds.push_back(std::stoull(p));
  return seeds;
}

TournamentConfig build_config(const CliOptions& opt) {
  namespace agents = pommer::agents;
  namespace features = pommer::features;
  TournamentConfig cfg;

  if (opt.mode == "ffa") cfg.game.mode = pommer::GameMode::FFA;
  else if (opt.mode == "team") cfg.game.mode = pommer::GameMode::Team;
  else throw pommer::ConfigError("--mode must be ffa or team");
  cfg.game.max_ticks = opt.max_ticks;

  const auto kinds = split(opt.agents, ',');
  if (kinds.size() != pommer::kNumAgents)
    throw pommer::ConfigError("--agents needs exactly four comma-separated kinds");

  agents::Budget budget;
  budget.ms = opt.budget_ms;
  budget.iters = opt.budget_iters;

  agents::FemctsParams fem;
  fem.space = features::action_space_by_rows(opt.nea);
  fem.feats.set = features::FeatureSet::by_name(opt.feature_set);
  fem.evo.population_size = opt.pop_size;
  fem.evo.elite_count = opt.elites;
  fem.evo.tournament_size = opt.tournament;
  fem.evo.rollouts_per_individual = opt.rollouts_per_individual;
  fem.evo.mutation_strength = opt.mutation_strength;
  fem.evo.mutation_prob = opt.mutation_prob;
  if (opt.mutation_style == "shared")
    fem.evo.style = pommer::evo::MutationStyle::SharedFeatureSet;
  else if (opt.mutation_style == "per-action")
    fem.evo.style = pommer::evo::MutationStyle::PerActionFeatureSets;
  else
    throw pommer::ConfigError("--mutation-style must be shared or per-action");
  agents::apply_space_defaults(fem);
  if (!opt.seed_in.empty()) fem.seed = pommer::evo::load_seed(opt.seed_in);

  for (int i = 0; i < pommer::kNumAgents; ++i) {
    agents::AgentSpec spec;
    spec.kind = agents::kind_by_name(kinds[i]);
    spec.budget = budget;
    spec.femcts = fem;
    cfg.specs[i] = spec;
  }

  cfg.seeds = parse_seeds(opt.seeds);
  cfg.games_per_seed = opt.games_per_seed;
  cfg.vision = opt.vision == "full" ? pommer::kFullVision : std::stoi(opt.vision);
  cfg.master_seed = opt.master_seed;
  cfg.out_dir = opt.out_dir;
  cfg.rotate_positions = !opt.no_rotation;
  cfg.jobs = opt.jobs;
  cfg.write_replays = !opt.no_replays;
  cfg.population_seed_out = opt.seed_out;
  cfg.quiet = opt.quiet;
  return cfg;
}

void add_common_options(CLI::App* cmd, CliOptions& opt, bool with_vision) {
  cmd->add_option("--mode", opt.mode, "ffa or team");
  cmd->add_option("--agents", opt.agents, "four agent kinds for slots 0-3");
  cmd->add_option("--seeds", opt.seeds, "seed count N (=> 1..N) or explicit list a,b,c");
  cmd->add_option("--games-per-seed", opt.games_per_seed);
  if (with_vision) cmd->add_option("--vision", opt.vision, "full or radius 0..4");
  cmd->add_option("--budget-ms", opt.budget_ms, "wall-clock decision budget");
  cmd->add_option("--budget-iters", opt.budget_iters,
                  "iteration budget; overrides --budget-ms, deterministic");
  cmd->add_option("--pop-size", opt.pop_size);
  cmd->add_option("--elites", opt.elites);
  cmd->add_option("--tournament", opt.tournament);
  cmd->add_option("--rollouts-per-individual", opt.rollouts_per_individual);
  cmd->add_option("--nea", opt.nea, "effective action count: 2, 3 or 6");
  cmd->add_option("--features", opt.feature_set, "all8, compact5 or constant");
  cmd->add_option("--mutation-strength", opt.mutation_strength);
  cmd->add_option("--mutation-prob", opt.mutation_prob);
  cmd->add_option("--mutation-style", opt.mutation_style, "shared or per-action");
  cmd->add_option("--population-seed-in", opt.seed_in, "weight matrix file seeding femcts");
  cmd->add_option("--population-seed-out", opt.seed_out, "capture file for the evolved matrix");
  cmd->add_option("--master-seed", opt.master_seed);
  cmd->add_option("--out", opt.out_dir, "output directory");
  cmd->add_option("--jobs", opt.jobs, "concurrent game lanes");
  cmd->add_option("--max-ticks", opt.max_ticks);
  cmd->add_flag("--no-rotation", opt.no_rotation, "fixed starting corners");
  cmd->add_flag("--no-replays", opt.no_replays);
  cmd->add_flag("--quiet", opt.quiet);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pommerman agent arena"};
  app.require_subcommand(1);

  CliOptions run_opt;
  CLI::App* run_cmd = app.add_subcommand("run", "play one tournament");
  add_common_options(run_cmd, run_opt, true);

  CliOptions sweep_opt;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep-po", "run the tournament at vision 0..4");
  add_common_options(sweep_cmd, sweep_opt, false);

  std::string replay_path;
  CLI::App* replay_cmd = app.add_subcommand("replay", "re-simulate and verify a replay");
  replay_cmd->add_option("file", replay_path, "replay file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      pommer::harness::run_tournament(build_config(run_opt));
      return 0;
    }
    if (sweep_cmd->parsed()) {
      pommer::harness::run_po_sweep(build_config(sweep_opt));
      return 0;
    }
    if (replay_cmd->parsed()) {
      const auto replay = pommer::parse_replay_file(replay_path);
      const auto check = pommer::validate_replay(replay);
      if (!check.ok) {
        std::cerr << "replay mismatch: " << check.message << '\n';
        return 3;
      }
      std::cout << "replay ok: " << check.final_tick << " ticks, outcome ";
      for (const auto r : check.simulated) std::cout << pommer::result_char(r);
      std::cout << '\n';
      return 0;
    }
  } catch (const pommer::ReplayError& e) {
    std::cerr << "replay error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
