#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "pommer/harness.hpp"

namespace pommer::harness {

namespace fs = std::filesystem;

int slot_of_spec(int spec_index, int game_index, bool rotate) {
  if (!rotate) return spec_index;
  return (spec_index - game_index % 4 + 4) % 4;
}

namespace {

int spec_at_slot(int slot, int game_index, bool rotate) {
  if (!rotate) return slot;
  return (slot + game_index) % 4;
}

struct GameJob {
  std::uint64_t seed = 0;
  int game_index = 0;
  int ordinal = 0;
};

struct LaneOutput {
  std::vector<CaptureEntry> capture;  // one entry per game, in lane order
};

void validate(const TournamentConfig& cfg) {
  if (cfg.seeds.empty()) throw ConfigError("at least one game seed required");
  if (cfg.games_per_seed < 1) throw ConfigError("games per seed must be positive");
  if (cfg.jobs < 1) throw ConfigError("jobs must be positive");
  if (cfg.vision != kFullVision && (cfg.vision < 0 || cfg.vision > kMaxBoard))
    throw ConfigError("vision must be 'full' or a small non-negative radius");
  pommer::validate(cfg.game);
}

GameRecord play_game(const TournamentConfig& cfg, const GameJob& job,
                     std::array<agents::Agent*, kNumAgents> agents_by_spec) {
  GameRecord rec;
  rec.game_seed = job.seed;
  rec.game_index = job.game_index;
  rec.ordinal = job.ordinal;

  GameState state = generate_board(job.seed, cfg.game);

  std::array<int, kNumAgents> spec_of_slot{};
  for (int slot = 0; slot < kNumAgents; ++slot) {
    spec_of_slot[slot] = spec_at_slot(slot, job.game_index, cfg.rotate_positions);
    rec.slot_of_spec[spec_of_slot[slot]] = slot;
  }
  for (auto* a : agents_by_spec) a->start_game();

  std::array<Rng, kNumAgents> rngs = {
      Rng(mix_seed(cfg.master_seed, job.seed, static_cast<std::uint64_t>(job.game_index), 0)),
      Rng(mix_seed(cfg.master_seed, job.seed, static_cast<std::uint64_t>(job.game_index), 1)),
      Rng(mix_seed(cfg.master_seed, job.seed, static_cast<std::uint64_t>(job.game_index), 2)),
      Rng(mix_seed(cfg.master_seed, job.seed, static_cast<std::uint64_t>(job.game_index), 3))};

  Replay replay;
  replay.game_seed = job.seed;
  replay.mode = cfg.game.mode;
  replay.vision = cfg.vision;

  while (outcome(state).ongoing()) {
    std::array<Action, kNumAgents> acts{};
    std::array<int, kNumAgents> logged{};
    for (int slot = 0; slot < kNumAgents; ++slot) {
      if (!state.agents[slot].alive) {
        acts[slot] = Action::Stop;
        logged[slot] = -1;
        continue;
      }
      const int spec = spec_of_slot[slot];
      const Observation obs = observe(state, slot, cfg.vision);
      const Action a = agents_by_spec[spec]->act(obs, rngs[slot]);
      acts[slot] = a;
      logged[slot] = static_cast<int>(a);
      rec.decision_ms_by_spec[spec].push_back(
          static_cast<float>(agents_by_spec[spec]->stats().decision_ms));
    }
    replay.actions.push_back(logged);
    advance_in_place(state, acts);
  }

  const GameOutcome out = outcome(state);
  rec.final_tick = state.tick;
  replay.recorded = out.per_agent;

  for (int spec = 0; spec < kNumAgents; ++spec) {
    const int slot = rec.slot_of_spec[spec];
    if (cfg.game.mode == GameMode::FFA) {
      rec.scored_by_spec[spec] = out.per_agent[slot];
    } else {
      if (out.status == GameOutcome::Status::Tie) {
        rec.scored_by_spec[spec] = Result::Tie;
      } else {
        bool won = false;
        for (const auto id : out.winners) won |= id == slot;
        rec.scored_by_spec[spec] = won ? Result::Win : Result::Loss;
      }
    }
  }

  if (!cfg.out_dir.empty() && cfg.write_replays) {
    std::ostringstream name;
    name << "seed" << job.seed << "_g" << job.game_index << ".replay";
    rec.replay_path = (fs::path(cfg.out_dir) / "replays" / name.str()).string();
    write_replay_file(rec.replay_path, replay);
  }
  return rec;
}

}  // namespace

std::array<std::string, kNumAgents> resolve_labels(const TournamentConfig& cfg) {
  std::array<std::string, kNumAgents> labels = cfg.labels;
  for (int i = 0; i < kNumAgents; ++i)
    if (labels[i].empty()) labels[i] = agents::kind_name(cfg.specs[i].kind);
  // Disambiguate duplicates ("mcts" -> "mcts.0", "mcts.2") in FFA; team rows
  // are grouped anyway.
  if (cfg.game.mode == GameMode::FFA) {
    for (int i = 0; i < kNumAgents; ++i) {
      bool dup = false;
      for (int j = 0; j < kNumAgents; ++j)
        if (j != i && labels[j] == labels[i]) dup = true;
      if (dup) {
        for (int j = 0; j < kNumAgents; ++j) {
          if (labels[j] == labels[i] && j != i) labels[j] += "." + std::to_string(j);
        }
        labels[i] += "." + std::to_string(i);
      }
    }
  }
  return labels;
}

ResultsTable aggregate(const TournamentConfig& cfg,
                       const std::vector<GameRecord>& records) {
  const auto labels = resolve_labels(cfg);
  ResultsTable table;

  auto bump = [](ResultsTable::Row& row, Result r) {
    row.n += 1;
    switch (r) {
      case Result::Win: row.wins += 1; break;
      case Result::Tie: row.ties += 1; break;
      case Result::Loss: row.losses += 1; break;
    }
  };

  if (cfg.game.mode == GameMode::FFA) {
    for (int spec = 0; spec < kNumAgents; ++spec) {
      ResultsTable::Row row;
      row.player = labels[spec];
      for (const auto& rec : records) bump(row, rec.scored_by_spec[spec]);
      table.rows.push_back(std::move(row));
    }
  } else {
    // Specs {0,2} and {1,3} always share a team; one row per team.
    for (int rep : {0, 1}) {
      ResultsTable::Row row;
      const std::string a = labels[rep];
      const std::string b = labels[rep + 2];
      row.player = a == b ? a : a + "+" + b;
      for (const auto& rec : records) bump(row, rec.scored_by_spec[rep]);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

TournamentResult run_tournament(const TournamentConfig& cfg) {
  validate(cfg);
  if (!cfg.out_dir.empty()) {
    fs::create_directories(cfg.out_dir);
    if (cfg.write_replays) fs::create_directories(fs::path(cfg.out_dir) / "replays");
  }

  std::vector<GameJob> jobs;
  for (std::size_t si = 0; si < cfg.seeds.size(); ++si)
    for (int gi = 0; gi < cfg.games_per_seed; ++gi)
      jobs.push_back(GameJob{cfg.seeds[si], gi,
                             static_cast<int>(si) * cfg.games_per_seed + gi});

  const int lanes = std::min<int>(cfg.jobs, static_cast<int>(jobs.size()));
  std::vector<GameRecord> records(jobs.size());
  std::vector<LaneOutput> lane_out(lanes);

  int femcts_spec = -1;
  for (int i = 0; i < kNumAgents; ++i)
    if (cfg.specs[i].kind == agents::AgentKind::Femcts && femcts_spec < 0) femcts_spec = i;

  auto run_lane = [&](int lane) {
    std::array<std::unique_ptr<agents::Agent>, kNumAgents> agents;
    std::array<agents::Agent*, kNumAgents> ptrs{};
    for (int i = 0; i < kNumAgents; ++i) {
      agents[i] = agents::make_agent(cfg.specs[i]);
      ptrs[i] = agents[i].get();
    }
    for (std::size_t j = static_cast<std::size_t>(lane); j < jobs.size();
         j += static_cast<std::size_t>(lanes)) {
      records[j] = play_game(cfg, jobs[j], ptrs);
      if (femcts_spec >= 0) {
        auto* fem = static_cast<agents::FemctsAgent*>(ptrs[femcts_spec]);
        CaptureEntry entry;
        entry.won = records[j].scored_by_spec[femcts_spec] == Result::Win;
        const auto& best = fem->best_individual();
        entry.fitness = best.fitness();
        entry.best = best.weights;
        lane_out[lane].capture.push_back(std::move(entry));
      }
    }
  };

  if (lanes <= 1) {
    run_lane(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(lanes);
    for (int lane = 0; lane < lanes; ++lane) threads.emplace_back(run_lane, lane);
    for (auto& t : threads) t.join();
  }

  TournamentResult result;
  result.records = std::move(records);
  result.table = aggregate(cfg, result.records);

  if (!cfg.population_seed_out.empty()) {
    if (femcts_spec < 0)
      throw ConfigError("--population-seed-out needs a femcts agent in the lineup");
    // Prefer the snapshot closing the longest win streak; otherwise fall back
    // to the best-fitness snapshot seen anywhere.
    int best_lane = -1, best_idx = -1, best_len = 0;
    for (int lane = 0; lane < lanes; ++lane) {
      const auto& entries = lane_out[lane].capture;
      const int idx = pick_capture_index(entries);
      if (idx < 0) continue;
      int len = 0;
      for (int k = idx; k >= 0 && entries[k].won; --k) len += 1;
      if (len > best_len) {
        best_len = len;
        best_lane = lane;
        best_idx = idx;
      }
    }
    if (best_lane >= 0) {
      evo::save_seed(lane_out[best_lane].capture[best_idx].best, cfg.population_seed_out);
      result.capture_note = "captured after a " + std::to_string(best_len) + "-game win streak";
    } else {
      const CaptureEntry* fallback = nullptr;
      for (const auto& lo : lane_out)
        for (const auto& e : lo.capture)
          if (!fallback || e.fitness > fallback->fitness) fallback = &e;
      if (!fallback) throw ConfigError("no games played; nothing to capture");
      evo::save_seed(fallback->best, cfg.population_seed_out);
      result.capture_note = "warning: no win streak of length >= 2; wrote the best-fitness individual";
    }
    if (!cfg.quiet)
      std::cerr << "population seed -> " << cfg.population_seed_out << " ("
                << result.capture_note << ")\n";
  }

  if (!cfg.out_dir.empty()) {
    write_results_csv((fs::path(cfg.out_dir) / "results.csv").string(), result.table);
    write_games_csv((fs::path(cfg.out_dir) / "games.csv").string(), cfg, result.records);
  }
  if (!cfg.quiet) print_table(std::cout, result.table);
  return result;
}

int pick_capture_index(const std::vector<CaptureEntry>& entries) {
  int best_len = 0, best_end = -1;
  int run = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    run = entries[i].won ? run + 1 : 0;
    if (run >= 2 && run >= best_len) {
      best_len = run;
      best_end = static_cast<int>(i);
    }
  }
  return best_end;
}

void print_table(std::ostream& out, const ResultsTable& table) {
  out << "    N    Win    Tie   Loss  Player\n";
  char buf[96];
  for (const auto& row : table.rows) {
    std::snprintf(buf, sizeof buf, "%5ld %5.1f%% %5.1f%% %5.1f%%  %s\n", row.n,
                  row.pct(row.wins), row.pct(row.ties), row.pct(row.losses),
                  row.player.c_str());
    out << buf;
  }
}

void write_results_csv(const std::string& path, const ResultsTable& table) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << "player,wins,ties,losses,n\n";
  for (const auto& row : table.rows)
    out << row.player << ',' << row.wins << ',' << row.ties << ',' << row.losses << ','
        << row.n << '\n';
}

void write_games_csv(const std::string& path, const TournamentConfig& cfg,
                     const std::vector<GameRecord>& records) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  const auto labels = resolve_labels(cfg);
  out << "game_seed,game_index,player,result,final_tick,replay\n";
  for (const auto& rec : records) {
    const int players = cfg.game.mode == GameMode::FFA ? kNumAgents : 2;
    for (int p = 0; p < players; ++p) {
      const int spec = p;  // team rows use the representative specs 0 and 1
      std::string name = labels[spec];
      if (cfg.game.mode == GameMode::Team && labels[spec] != labels[spec + 2])
        name += "+" + labels[spec + 2];
      out << rec.game_seed << ',' << rec.game_index << ',' << name << ','
          << result_char(rec.scored_by_spec[spec]) << ',' << rec.final_tick << ','
          << rec.replay_path << '\n';
    }
  }
}

std::vector<SweepRow> run_po_sweep(const TournamentConfig& base) {
  std::vector<SweepRow> rows;
  for (int v = 0; v <= 4; ++v) {
    TournamentConfig cfg = base;
    cfg.vision = v;
    if (!base.out_dir.empty())
      cfg.out_dir = (fs::path(base.out_dir) / ("po" + std::to_string(v))).string();
    if (!cfg.quiet) std::cout << "--- vision " << v << " ---\n";
    const TournamentResult res = run_tournament(cfg);
    for (const auto& row : res.table.rows)
      rows.push_back(SweepRow{v, row.player, row.pct(row.wins), row.pct(row.ties)});
  }
  if (!base.out_dir.empty()) {
    fs::create_directories(base.out_dir);
    write_sweep_csv((fs::path(base.out_dir) / "po_sweep.csv").string(), rows);
    write_sweep_svg((fs::path(base.out_dir) / "po_sweep.svg").string(), rows);
  }
  return rows;
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << "vision,player,win_pct,tie_pct\n";
  char buf[32];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", r.win_pct, r.tie_pct);
    out << r.vision << ',' << r.player << ',' << buf << '\n';
  }
}

}  // namespace pommer::harness
