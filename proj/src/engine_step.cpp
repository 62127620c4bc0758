#include <algorithm>

#include "pommer/engine.hpp"

namespace pommer {

namespace {

// Cells covered by a bomb's blast: the bomb cell plus up to strength-1 cells
// in each cardinal direction. Rigid blocks (and survives); the first Wood hit
// is covered (it burns) and blocks the rest of the ray. Power-ups, bombs and
// agents do not block.
template <typename MarkFn>
void for_each_blast_cell(const GameState& s, const Bomb& b, MarkFn&& mark) {
  mark(b.pos);
  for (int d = 0; d < 4; ++d) {
    Coord c = b.pos;
    for (int k = 1; k < b.blast_strength; ++k) {
      c = moved(c, d);
      if (!s.in_bounds(c)) break;
      const Tile t = s.tile(c);
      if (t == Tile::Rigid) break;
      mark(c);
      if (t == Tile::Wood) break;
    }
  }
}

}  // namespace

void advance_in_place(GameState& s, const std::array<Action, kNumAgents>& actions) {
  if (!outcome(s).ongoing())
    throw std::invalid_argument("step() called on a terminal state");

  // --- 1. fuses and explosions (with chain triggering) ---
  for (auto& b : s.bombs) b.fuse -= 1;

  // Seed the exploding set (fuse ran out, or the bomb sits in a standing
  // flame), then expand to a fixpoint: any bomb in an already blasted cell
  // detonates in the same tick.
  std::array<bool, kMaxBombs> exploding{};
  std::array<bool, kMaxCells> blasted{};
  {
    InlineVec<int, kMaxBombs> work;
    for (std::size_t i = 0; i < s.bombs.size(); ++i) {
      if (s.bombs[i].fuse <= 0 || s.flame[s.cell(s.bombs[i].pos)] > 0) {
        exploding[i] = true;
        work.push_back(static_cast<int>(i));
      }
    }
    for (std::size_t head = 0; head < work.size(); ++head) {
      const Bomb& b = s.bombs[static_cast<std::size_t>(work[head])];
      for_each_blast_cell(s, b, [&](Coord c) { blasted[s.cell(c)] = true; });
      for (std::size_t i = 0; i < s.bombs.size(); ++i) {
        if (!exploding[i] && blasted[s.cell(s.bombs[i].pos)]) {
          exploding[i] = true;
          work.push_back(static_cast<int>(i));
        }
      }
    }
  }

  // Remove exploded bombs (stable) and refund the owners' ammo.
  {
    std::size_t out = 0;
    for (std::size_t i = 0; i < s.bombs.size(); ++i) {
      if (exploding[i]) {
        s.agents[s.bombs[i].owner].ammo += 1;
      } else {
        s.bombs[out++] = s.bombs[i];
      }
    }
    s.bombs.resize(out);
  }

  // Blasted wood is consumed on the spot; whatever it hid sits under the
  // flames until someone survives the walk there.
  for (int c = 0; c < s.cells(); ++c) {
    if (blasted[c] && s.board[c] == Tile::Wood) {
      s.board[c] = s.hidden[c];
      s.hidden[c] = Tile::Passage;
    }
  }

  // --- 2. flames tick down, new flames land ---
  for (int c = 0; c < s.cells(); ++c) {
    if (s.flame[c] > 0) s.flame[c] -= 1;
  }
  for (int c = 0; c < s.cells(); ++c) {
    if (blasted[c]) s.flame[c] = std::max(s.flame[c], s.flame_life);
  }

  // --- 3. simultaneous movement ---
  std::array<Coord, kNumAgents> origin;
  std::array<Coord, kNumAgents> target;
  std::array<int, kNumAgents> kick_dir;
  kick_dir.fill(-1);
  for (int i = 0; i < kNumAgents; ++i) {
    origin[i] = s.agents[i].pos;
    target[i] = origin[i];
    const auto& a = s.agents[i];
    if (!a.alive || !is_move(actions[i])) continue;
    const int d = static_cast<int>(actions[i]);
    const Coord t = moved(origin[i], d);
    if (!s.in_bounds(t) || !is_walkable(s.tile(t))) continue;  // blocked -> Stop
    if (s.bomb_at(t) != nullptr) {
      if (!a.can_kick) continue;  // blocked -> Stop
      // Kick pre-check against the current occupancy: the bomb needs an open
      // cell to start sliding into.
      const Coord beyond = moved(t, d);
      if (!s.in_bounds(beyond) || !is_walkable(s.tile(beyond)) ||
          s.bomb_at(beyond) != nullptr || s.agent_at(beyond) != nullptr)
        continue;  // kick impossible -> Stop
      kick_dir[i] = d;
    }
    target[i] = t;
  }

  // Contested targets, swaps, and moves into agents that end up staying all
  // revert. Iterate to a fixpoint; each pass can only add reverts.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < kNumAgents; ++i) {
      if (!s.agents[i].alive || target[i] == origin[i]) continue;
      for (int j = 0; j < kNumAgents; ++j) {
        if (j == i || !s.agents[j].alive) continue;
        const bool same_target = target[j] == target[i];
        const bool swap = target[i] == origin[j] && target[j] == origin[i];
        const bool into_stationary = target[i] == origin[j] && target[j] == origin[j];
        if (same_target || swap || into_stationary) {
          target[i] = origin[i];
          if (same_target || swap) target[j] = origin[j];
          kick_dir[i] = -1;
          if (same_target || swap) kick_dir[j] = -1;
          changed = true;
          break;
        }
      }
    }
  }

  for (int i = 0; i < kNumAgents; ++i) {
    if (kick_dir[i] >= 0 && target[i] != origin[i]) {
      if (Bomb* b = s.bomb_at(target[i])) b->dir = static_cast<std::int8_t>(kick_dir[i]);
    }
    s.agents[i].pos = target[i];
  }

  // Power-up pickups at the final positions.
  for (auto& a : s.agents) {
    if (!a.alive) continue;
    const int c = s.cell(a.pos);
    switch (s.board[c]) {
      case Tile::ExtraBomb: a.ammo += 1; break;
      case Tile::IncrRange: a.blast_strength += 1; break;
      case Tile::Kick: a.can_kick = true; break;
      default: continue;
    }
    s.board[c] = Tile::Passage;
  }

  // --- 4. bomb placement ---
  for (int i = 0; i < kNumAgents; ++i) {
    auto& a = s.agents[i];
    if (!a.alive || actions[i] != Action::PlaceBomb) continue;
    if (a.ammo == 0 || s.bomb_at(a.pos) != nullptr) continue;  // resolves as Stop
    if (s.bombs.size() == s.bombs.capacity()) continue;        // cannot happen in practice
    Bomb b;
    b.pos = a.pos;
    b.owner = a.id;
    b.blast_strength = a.blast_strength;
    b.fuse = static_cast<std::int8_t>(s.bomb_fuse);
    s.bombs.push_back(b);
    a.ammo -= 1;
  }

  // --- 5. sliding bombs advance one cell (including freshly kicked ones) ---
  for (auto& b : s.bombs) {
    if (b.dir < 0) continue;
    const Coord next = moved(b.pos, b.dir);
    if (!s.in_bounds(next) || !is_walkable(s.tile(next)) ||
        s.bomb_at(next) != nullptr || s.agent_at(next) != nullptr) {
      b.dir = -1;
    } else {
      b.pos = next;
    }
  }

  // --- 6. deaths and tick ---
  for (auto& a : s.agents) {
    if (a.alive && s.flame[s.cell(a.pos)] > 0) a.alive = false;
  }
  s.tick += 1;
}

InlineVec<Action, kNumActions> legal_actions(const GameState& s, int agent_id) {
  InlineVec<Action, kNumActions> out;
  const auto& a = s.agents[agent_id];
  for (int d = 0; d < 4; ++d) {
    const Coord t = moved(a.pos, d);
    if (s.in_bounds(t) && s.tile(t) != Tile::Rigid && s.tile(t) != Tile::Wood)
      out.push_back(static_cast<Action>(d));
  }
  out.push_back(Action::Stop);
  if (a.ammo > 0 && s.bomb_at(a.pos) == nullptr) out.push_back(Action::PlaceBomb);
  return out;
}

GameOutcome outcome(const GameState& s) {
  GameOutcome o;
  std::array<int, 2> team_alive{};
  int alive = 0;
  for (const auto& a : s.agents) {
    if (a.alive) {
      alive += 1;
      if (s.mode == GameMode::Team) team_alive[a.team] += 1;
    }
  }

  auto fill_tie = [&] {
    o.status = GameOutcome::Status::Tie;
    for (int i = 0; i < kNumAgents; ++i)
      o.per_agent[i] = s.agents[i].alive ? Result::Tie : Result::Loss;
  };

  if (s.mode == GameMode::FFA) {
    if (alive <= 1) {
      if (alive == 0) {
        fill_tie();
      } else {
        o.status = GameOutcome::Status::Win;
        for (int i = 0; i < kNumAgents; ++i) {
          if (s.agents[i].alive) {
            o.winners.push_back(static_cast<std::uint8_t>(i));
            o.per_agent[i] = Result::Win;
          } else {
            o.per_agent[i] = Result::Loss;
          }
        }
      }
      return o;
    }
  } else {
    if (team_alive[0] == 0 || team_alive[1] == 0) {
      if (team_alive[0] == 0 && team_alive[1] == 0) {
        fill_tie();
      } else {
        const int winner_team = team_alive[0] > 0 ? 0 : 1;
        o.status = GameOutcome::Status::Win;
        for (int i = 0; i < kNumAgents; ++i) {
          if (s.agents[i].team == winner_team) {
            o.winners.push_back(static_cast<std::uint8_t>(i));
            o.per_agent[i] = Result::Win;
          } else {
            o.per_agent[i] = Result::Loss;
          }
        }
      }
      return o;
    }
  }

  if (s.tick >= s.max_ticks) {
    fill_tie();
    return o;
  }
  o.status = GameOutcome::Status::Ongoing;
  return o;
}

}  // namespace pommer
