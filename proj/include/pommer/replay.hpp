#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "pommer/engine.hpp"

// Line-oriented replay log:
//
//   pommer-replay v1 <gameSeed> <ffa|team> <full|0..4>
//   <tick> <a0> <a1> <a2> <a3>      one line per tick, action index 0-5,
//                                   -1 for an agent that was already dead
//   outcome <WTL><WTL><WTL><WTL>    one letter per agent slot
//
// Re-simulating the recorded actions from the seed-generated board must
// reproduce the recorded outcome exactly. Replays assume the default board
// configuration (only mode and vision vary via the header); pass a matching
// GameConfig to validate() when the original run overrode other knobs.

namespace pommer {

struct Replay {
  std::uint64_t game_seed = 0;
  GameMode mode = GameMode::FFA;
  int vision = kFullVision;
  std::vector<std::array<int, kNumAgents>> actions;  // -1 = dead
  std::array<Result, kNumAgents> recorded{};
};

struct ReplayError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_replay(std::ostream& out, const Replay& replay);
void write_replay_file(const std::string& path, const Replay& replay);

Replay parse_replay(std::istream& in);          // throws ReplayError
Replay parse_replay_file(const std::string& path);

struct ReplayCheck {
  bool ok = false;
  std::string message;  // human-readable mismatch description when !ok
  int final_tick = 0;
  std::array<Result, kNumAgents> simulated{};
};

// Regenerates the board from the header seed, applies the recorded actions
// through the forward model and compares the terminal outcome.
ReplayCheck validate_replay(const Replay& replay, GameConfig config = GameConfig{});

}  // namespace pommer
