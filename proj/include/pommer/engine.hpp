#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "pommer/util.hpp"

// Bomberman-style forward model on a square grid. Four agents act
// simultaneously each tick; bombs tick down, explode in cardinal crosses,
// destroy wooden walls and reveal the power-ups hidden beneath them.
//
// The tick resolution order is fixed and documented on advance_in_place().
// Everything here is deterministic: given equal inputs, step() produces
// value-equal outputs, so searches and replays are exactly reproducible.

namespace pommer {

inline constexpr int kMaxBoard = 11;
inline constexpr int kMaxCells = kMaxBoard * kMaxBoard;
inline constexpr int kMaxBombs = 64;
inline constexpr int kNumAgents = 4;
inline constexpr int kNumActions = 6;
inline constexpr int kFullVision = -1;

enum class Tile : std::uint8_t {
  Passage = 0,
  Rigid = 1,
  Wood = 2,
  ExtraBomb = 3,   // +1 ammo when picked up
  IncrRange = 4,   // +1 blast strength
  Kick = 5,        // enables bomb kicking
  Fog = 6,         // observation-only: cell outside the vision window
};

inline bool is_powerup(Tile t) {
  return t == Tile::ExtraBomb || t == Tile::IncrRange || t == Tile::Kick;
}
// Tiles an agent (or a sliding bomb) may occupy.
inline bool is_walkable(Tile t) { return t == Tile::Passage || is_powerup(t); }

enum class Action : std::uint8_t {
  Up = 0,
  Down = 1,
  Left = 2,
  Right = 3,
  Stop = 4,
  PlaceBomb = 5,
};

inline bool is_move(Action a) { return static_cast<int>(a) < 4; }

// Row/col deltas indexed by the four move actions. Row 0 is the top row.
inline constexpr std::array<int, 4> kRowDelta = {-1, 1, 0, 0};
inline constexpr std::array<int, 4> kColDelta = {0, 0, -1, 1};

enum class GameMode : std::uint8_t { FFA = 0, Team = 1 };

struct Coord {
  std::int8_t row = 0;
  std::int8_t col = 0;
  friend bool operator==(Coord a, Coord b) = default;
};

inline Coord moved(Coord c, int dir) {
  return Coord{static_cast<std::int8_t>(c.row + kRowDelta[dir]),
               static_cast<std::int8_t>(c.col + kColDelta[dir])};
}

struct Bomb {
  Coord pos{};
  std::uint8_t owner = 0;
  std::uint8_t blast_strength = 2;
  std::int8_t fuse = 10;
  std::int8_t dir = -1;  // sliding direction after a kick; -1 = at rest
  friend bool operator==(const Bomb&, const Bomb&) = default;
};

struct Flame {
  Coord pos{};
  std::uint8_t remaining = 0;
  friend bool operator==(const Flame&, const Flame&) = default;
};

struct AgentState {
  std::uint8_t id = 0;
  Coord pos{};
  bool alive = true;
  std::uint8_t ammo = 1;
  std::uint8_t blast_strength = 2;
  bool can_kick = false;
  std::uint8_t team = 0;  // FFA: team == id; Team mode: 0 or 1
  friend bool operator==(const AgentState&, const AgentState&) = default;
};

struct GameConfig {
  int board_size = 11;
  GameMode mode = GameMode::FFA;
  int max_ticks = 800;
  int num_rigid = 36;  // must be a multiple of 4 (symmetric placement)
  int num_wood = 36;   // must be a multiple of 4
  double powerup_fraction = 0.5;
  int bomb_fuse = 10;
  int flame_life = 2;
  int start_ammo = 1;
  int start_blast = 2;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full ground-truth world state. Trivially copyable by design; a copy is one
// flat memcpy, which the tree searches rely on.
struct GameState {
  std::int8_t size = 11;
  GameMode mode = GameMode::FFA;
  std::uint16_t tick = 0;
  std::uint16_t max_ticks = 800;
  std::uint8_t flame_life = 2;
  std::uint8_t bomb_fuse = 10;
  std::uint16_t initial_wood = 0;
  std::array<Tile, kMaxCells> board{};
  // Power-up hidden under each Wood cell (Passage = nothing). Revealed when
  // the wood burns down.
  std::array<Tile, kMaxCells> hidden{};
  // Remaining flame ticks per cell; 0 = no flame.
  std::array<std::uint8_t, kMaxCells> flame{};
  InlineVec<Bomb, kMaxBombs> bombs;
  std::array<AgentState, kNumAgents> agents{};

  int cells() const { return static_cast<int>(size) * size; }
  int cell(Coord c) const { return c.row * size + c.col; }
  int cell(int r, int col) const { return r * size + col; }
  bool in_bounds(Coord c) const {
    return c.row >= 0 && c.row < size && c.col >= 0 && c.col < size;
  }
  Tile tile(Coord c) const { return board[cell(c)]; }

  const Bomb* bomb_at(Coord c) const {
    for (const auto& b : bombs)
      if (b.pos == c) return &b;
    return nullptr;
  }
  Bomb* bomb_at(Coord c) {
    for (auto& b : bombs)
      if (b.pos == c) return &b;
    return nullptr;
  }
  const AgentState* agent_at(Coord c) const {
    for (const auto& a : agents)
      if (a.alive && a.pos == c) return &a;
    return nullptr;
  }

  int alive_count() const {
    int n = 0;
    for (const auto& a : agents) n += a.alive ? 1 : 0;
    return n;
  }

  friend bool operator==(const GameState&, const GameState&) = default;
};

// Start corner for each agent id, clockwise from the top-left. Diagonal
// corners (ids {0,2} and {1,3}) form the two teams in Team mode.
inline Coord start_corner(int id, int board_size) {
  const auto last = static_cast<std::int8_t>(board_size - 1);
  switch (id) {
    case 0: return Coord{0, 0};
    case 1: return Coord{0, last};
    case 2: return Coord{last, last};
    default: return Coord{last, 0};
  }
}

inline bool are_enemies(const AgentState& a, const AgentState& b) {
  return a.team != b.team;
}

enum class Result : std::uint8_t { Win = 0, Tie = 1, Loss = 2 };

inline char result_char(Result r) {
  return r == Result::Win ? 'W' : (r == Result::Tie ? 'T' : 'L');
}

struct GameOutcome {
  enum class Status : std::uint8_t { Ongoing, Win, Tie };
  Status status = Status::Ongoing;
  InlineVec<std::uint8_t, kNumAgents> winners;  // ids; valid when status == Win
  std::array<Result, kNumAgents> per_agent{};   // valid when terminal
  bool ongoing() const { return status == Status::Ongoing; }
};

// One agent's view of the world. Cells outside the Chebyshev vision window
// are Fog; bombs and flames outside the window are dropped. Deaths are public
// (the alive flags are always ground truth), but an unseen agent's position
// and gear are not: the view falls back to its start corner and starting
// stats. Under full vision the observation carries the complete state,
// including the hidden power-up map, so it can be turned back into the exact
// ground truth.
struct AgentView {
  AgentState state{};
  bool position_known = false;
  friend bool operator==(const AgentView&, const AgentView&) = default;
};

struct Observation {
  std::uint8_t viewer = 0;
  std::int8_t size = 11;
  GameMode mode = GameMode::FFA;
  std::uint16_t tick = 0;
  std::uint16_t max_ticks = 800;
  std::uint8_t flame_life = 2;
  std::uint8_t bomb_fuse = 10;
  std::uint16_t initial_wood = 0;
  std::int8_t vision = kFullVision;  // kFullVision or the Chebyshev radius
  std::array<Tile, kMaxCells> board{};
  std::array<std::uint8_t, kMaxCells> flame{};
  InlineVec<Bomb, kMaxBombs> bombs;
  std::array<AgentView, kNumAgents> agents{};
  bool hidden_known = false;  // true only under full vision
  std::array<Tile, kMaxCells> hidden{};

  const AgentState& self() const { return agents[viewer].state; }
  int cell(Coord c) const { return c.row * size + c.col; }
  bool in_bounds(Coord c) const {
    return c.row >= 0 && c.row < size && c.col >= 0 && c.col < size;
  }
};

void validate(const GameConfig& config);

// Deterministic board generation: rigid and wooden walls are placed on whole
// 4-fold rotation orbits so every start corner faces the same layout, the
// corner pockets stay clear, and all corners stay mutually reachable through
// non-rigid cells. Power-ups are hidden under a fraction of the wood orbits.
// Throws ConfigError when the requested counts cannot fit.
GameState generate_board(std::uint64_t game_seed, const GameConfig& config);

// Advances the state by one tick of simultaneous actions, in this order:
//   1. bomb fuses tick down; bombs at fuse 0 or touched by standing flames
//      explode, chaining transitively through blast paths
//   2. existing flames tick down (expiring flames reveal what burnt wood was
//      hiding), then the new blast flames land
//   3. simultaneous movement: blocked moves become Stop, contested targets
//      and swaps revert, kickers set bombs sliding
//   4. bomb placement (requires ammo and a bomb-free cell)
//   5. sliding bombs advance one cell or stop when obstructed
//   6. agents standing in flames die; the tick counter advances
// Dead agents' actions are ignored. Throws std::invalid_argument on a
// terminal state.
void advance_in_place(GameState& state, const std::array<Action, kNumAgents>& actions);

inline GameState step(const GameState& state,
                      const std::array<Action, kNumAgents>& actions) {
  GameState next = state;
  advance_in_place(next, actions);
  return next;
}

// Actions that are not trivially blocked for this agent: moves clipped by
// board edge / rigid / wood, PlaceBomb only with ammo and a bomb-free cell.
// Stop is always available. Returned in ascending action order.
InlineVec<Action, kNumActions> legal_actions(const GameState& state, int agent_id);

GameOutcome outcome(const GameState& state);

Observation observe(const GameState& state, int agent_id, int vision = kFullVision);

}  // namespace pommer
