#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "pommer/agents.hpp"
#include "pommer/replay.hpp"

// Seeded tournament runner: plays gameSeeds x gamesPerSeed games between four
// configured agents, rotating starting corners, logging replays and decision
// times, and aggregating win/tie/loss tables. Games are distributed
// round-robin over `jobs` worker lanes; each lane owns its agent instances,
// so an evolved population persists game-to-game along its lane. Everything
// is derived from master_seed, so iteration-budget runs reproduce exactly.

namespace pommer::harness {

struct TournamentConfig {
  GameConfig game;
  std::array<agents::AgentSpec, kNumAgents> specs;
  std::array<std::string, kNumAgents> labels;  // empty -> derived from kinds
  std::vector<std::uint64_t> seeds;
  int games_per_seed = 5;
  int vision = kFullVision;
  std::uint64_t master_seed = 1;
  std::string out_dir;  // empty: no files written
  bool rotate_positions = true;
  int jobs = 1;
  bool write_replays = true;
  std::string population_seed_out;  // write the captured FEMCTS matrix here
  bool quiet = false;
};

struct GameRecord {
  std::uint64_t game_seed = 0;
  int game_index = 0;  // within its seed
  int ordinal = 0;     // global play order
  int final_tick = 0;
  // Result attributed to each spec. FFA: the agent's own outcome; Team mode:
  // its team's outcome.
  std::array<Result, kNumAgents> scored_by_spec{};
  std::array<int, kNumAgents> slot_of_spec{};
  std::string replay_path;
  std::array<std::vector<float>, kNumAgents> decision_ms_by_spec;
};

struct ResultsTable {
  struct Row {
    std::string player;
    long wins = 0, ties = 0, losses = 0, n = 0;
    double pct(long x) const { return n > 0 ? 100.0 * x / n : 0.0; }
  };
  std::vector<Row> rows;
};

struct TournamentResult {
  ResultsTable table;
  std::vector<GameRecord> records;
  std::string capture_note;  // how the population seed was captured, if it was
};

// Which slot (corner) a spec occupies in the game_index-th repeat of a seed.
int slot_of_spec(int spec_index, int game_index, bool rotate);

std::array<std::string, kNumAgents> resolve_labels(const TournamentConfig& config);

TournamentResult run_tournament(const TournamentConfig& config);

ResultsTable aggregate(const TournamentConfig& config,
                       const std::vector<GameRecord>& records);

void print_table(std::ostream& out, const ResultsTable& table);
void write_results_csv(const std::string& path, const ResultsTable& table);
void write_games_csv(const std::string& path, const TournamentConfig& config,
                     const std::vector<GameRecord>& records);

// Snapshot of the tracked FEMCTS agent after one game, used for seed capture.
struct CaptureEntry {
  bool won = false;
  double fitness = 0.0;
  features::WeightMatrix best;
};

// Index of the snapshot ending the longest win streak of length >= 2 (the
// latest such streak on ties), or -1 when no streak qualifies.
int pick_capture_index(const std::vector<CaptureEntry>& entries);

struct SweepRow {
  int vision = 0;
  std::string player;
  double win_pct = 0.0;
  double tie_pct = 0.0;
};

// Runs the tournament at vision 0..4 (outputs under out_dir/po<v>/) and
// writes po_sweep.csv plus the grouped-bar po_sweep.svg.
std::vector<SweepRow> run_po_sweep(const TournamentConfig& base);

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);
void write_sweep_svg(const std::string& path, const std::vector<SweepRow>& rows);

}  // namespace pommer::harness
