#include <algorithm>
#include <vector>

#include "pommer/engine.hpp"

namespace pommer {

namespace {

Coord rotate90(Coord c, int n) {
  // (r, c) -> (c, n-1-r), a quarter turn about the board center.
  return Coord{c.col, static_cast<std::int8_t>(n - 1 - c.row)};
}

// Cells that must stay clear so every agent can leave its corner.
bool is_reserved(Coord c, int n) {
  for (int id = 0; id < kNumAgents; ++id) {
    const Coord corner = start_corner(id, n);
    if (c == corner) return true;
    for (int d = 0; d < 4; ++d) {
      const Coord adj = moved(corner, d);
      if (adj.row >= 0 && adj.row < n && adj.col >= 0 && adj.col < n && c == adj)
        return true;
    }
  }
  return false;
}

// All corners mutually reachable through non-rigid cells (wood is breakable,
// so it counts as traversable here).
bool corners_connected(const GameState& s) {
  const int n = s.size;
  std::array<bool, kMaxCells> seen{};
  InlineVec<Coord, kMaxCells> queue;
  queue.push_back(start_corner(0, n));
  seen[s.cell(queue[0])] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Coord cur = queue[head];
    for (int d = 0; d < 4; ++d) {
      const Coord nxt = moved(cur, d);
      if (!s.in_bounds(nxt) || seen[s.cell(nxt)]) continue;
      if (s.tile(nxt) == Tile::Rigid) continue;
      seen[s.cell(nxt)] = true;
      queue.push_back(nxt);
    }
  }
  for (int id = 1; id < kNumAgents; ++id)
    if (!seen[s.cell(start_corner(id, n))]) return false;
  return true;
}

}  // namespace

void validate(const GameConfig& config) {
  if (config.board_size < 6 || config.board_size > kMaxBoard)
    throw ConfigError("board size must be in [6, " + std::to_string(kMaxBoard) + "]");
  if (config.num_rigid < 0 || config.num_wood < 0)
    throw ConfigError("negative tile counts");
  if (config.num_rigid % 4 != 0 || config.num_wood % 4 != 0)
    throw ConfigError("rigid/wood counts must be multiples of 4 for the symmetric layout");
  if (config.powerup_fraction < 0.0 || config.powerup_fraction > 1.0)
    throw ConfigError("powerup fraction must be in [0, 1]");
  if (config.max_ticks < 1) throw ConfigError("max_ticks must be positive");
  if (config.bomb_fuse < 1 || config.bomb_fuse > 10)
    throw ConfigError("bomb fuse must be in [1, 10]");
  if (config.flame_life < 1) throw ConfigError("flame life must be positive");
  if (config.start_blast < 2) throw ConfigError("start blast strength must be >= 2");

  // Count the size-4 rotation orbits available for wall placement.
  const int n = config.board_size;
  int orbit_cells = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Coord cc{static_cast<std::int8_t>(r), static_cast<std::int8_t>(c)};
      if (n % 2 == 1 && r == n / 2 && c == n / 2) continue;  // fixed point
      if (is_reserved(cc, n)) continue;
      orbit_cells++;
    }
  // A reserved cell never shares an orbit with a free one (the reserved set is
  // itself rotation-symmetric), so orbit_cells is a multiple of 4.
  if (config.num_rigid + config.num_wood > orbit_cells)
    throw ConfigError("rigid+wood counts do not fit the symmetric layout");
}

GameState generate_board(std::uint64_t game_seed, const GameConfig& config) {
  validate(config);
  const int n = config.board_size;

  // Orbit representatives (lexicographically smallest member).
  std::vector<Coord> reps;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Coord cc{static_cast<std::int8_t>(r), static_cast<std::int8_t>(c)};
      if (n % 2 == 1 && r == n / 2 && c == n / 2) continue;
      if (is_reserved(cc, n)) continue;
      bool smallest = true;
      Coord p = cc;
      for (int k = 0; k < 3 && smallest; ++k) {
        p = rotate90(p, n);
        if (p.row < cc.row || (p.row == cc.row && p.col < cc.col)) smallest = false;
      }
      if (smallest) reps.push_back(cc);
    }
  }

  const int rigid_orbits = config.num_rigid / 4;
  const int wood_orbits = config.num_wood / 4;

  Rng rng(mix_seed(game_seed, 0x626f617264ULL));  // board-layout stream

  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Coord> order = reps;
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
      std::swap(order[i], order[rng.next_int(i + 1)]);

    GameState s;
    s.size = static_cast<std::int8_t>(n);
    s.mode = config.mode;
    s.max_ticks = static_cast<std::uint16_t>(config.max_ticks);
    s.flame_life = static_cast<std::uint8_t>(config.flame_life);
    s.bomb_fuse = static_cast<std::uint8_t>(config.bomb_fuse);
    s.board.fill(Tile::Passage);
    s.hidden.fill(Tile::Passage);
    s.flame.fill(0);

    auto paint_orbit = [&](Coord rep, Tile t) {
      Coord p = rep;
      for (int k = 0; k < 4; ++k) {
        s.board[s.cell(p)] = t;
        p = rotate90(p, n);
      }
    };

    std::vector<Coord> wood_reps;
    int used = 0;
    for (int i = 0; i < rigid_orbits; ++i) paint_orbit(order[used++], Tile::Rigid);
    for (int i = 0; i < wood_orbits; ++i) {
      wood_reps.push_back(order[used]);
      paint_orbit(order[used++], Tile::Wood);
    }

    if (!corners_connected(s)) continue;

    // Hide power-ups under whole wood orbits, same item on all four images.
    const int item_orbits =
        static_cast<int>(static_cast<double>(wood_orbits) * config.powerup_fraction);
    for (int i = static_cast<int>(wood_reps.size()) - 1; i > 0; --i)
      std::swap(wood_reps[i], wood_reps[rng.next_int(i + 1)]);
    for (int i = 0; i < item_orbits; ++i) {
      const Tile item = static_cast<Tile>(static_cast<int>(Tile::ExtraBomb) + rng.next_int(3));
      Coord p = wood_reps[i];
      for (int k = 0; k < 4; ++k) {
        s.hidden[s.cell(p)] = item;
        p = rotate90(p, n);
      }
    }

    for (int id = 0; id < kNumAgents; ++id) {
      auto& a = s.agents[id];
      a.id = static_cast<std::uint8_t>(id);
      a.pos = start_corner(id, n);
      a.alive = true;
      a.ammo = static_cast<std::uint8_t>(config.start_ammo);
      a.blast_strength = static_cast<std::uint8_t>(config.start_blast);
      a.can_kick = false;
      a.team = static_cast<std::uint8_t>(config.mode == GameMode::Team ? id % 2 : id);
    }
    s.initial_wood = static_cast<std::uint16_t>(config.num_wood);
    return s;
  }

  throw ConfigError("could not place walls with all corners connected");
}

}  // namespace pommer
