#include <algorithm>
#include <cmath>
#include <limits>

#include "pommer/heuristic.hpp"

namespace pommer::agents {

double heuristic_value(const GameState& s, int agent_id, const HeuristicWeights& w) {
  const GameOutcome out = outcome(s);
  if (!out.ongoing()) {
    switch (out.per_agent[agent_id]) {
      case Result::Win: return 1.0;
      case Result::Loss: return -1.0;
      case Result::Tie: return 0.0;
    }
  }

  const AgentState& self = s.agents[agent_id];

  int enemies = 0, enemies_dead = 0;
  double best_enemy_sq = std::numeric_limits<double>::infinity();
  for (const auto& a : s.agents) {
    if (!are_enemies(a, self)) continue;
    enemies += 1;
    if (!a.alive) {
      enemies_dead += 1;
      continue;
    }
    const double dr = a.pos.row - self.pos.row;
    const double dc = a.pos.col - self.pos.col;
    best_enemy_sq = std::min(best_enemy_sq, dr * dr + dc * dc);
  }
  const double enemies_down =
      enemies > 0 ? static_cast<double>(enemies_dead) / enemies : 0.0;
  // Linear in distance rather than 1/(d+1): the approach gradient has to be
  // visible over rollout noise even from across the board.
  const double hunt =
      std::isinf(best_enemy_sq)
          ? 0.0
          : std::max(0.0, 1.0 - std::sqrt(best_enemy_sq) / (1.5 * s.size));

  const double power = (std::min<int>(self.ammo, 3) / 3.0 +
                        std::min<int>(self.blast_strength - 2, 3) / 3.0 +
                        (self.can_kick ? 1.0 : 0.0)) /
                       3.0;

  double best_bomb_sq = std::numeric_limits<double>::infinity();
  for (const auto& b : s.bombs) {
    const double dr = b.pos.row - self.pos.row;
    const double dc = b.pos.col - self.pos.col;
    best_bomb_sq = std::min(best_bomb_sq, dr * dr + dc * dc);
  }
  const double inv_dist_bomb =
      std::isinf(best_bomb_sq) ? 0.0 : 1.0 / (std::sqrt(best_bomb_sq) + 1.0);
  const double safety = 1.0 - inv_dist_bomb;

  double wood_score = 0.0;
  if (s.initial_wood > 0) {
    int wood_now = 0;
    for (int c = 0; c < s.cells(); ++c) wood_now += s.board[c] == Tile::Wood ? 1 : 0;
    wood_score = static_cast<double>(s.initial_wood - wood_now) / s.initial_wood;
  }

  const double raw = w.enemies_down * enemies_down + w.power * power +
                     w.safety * safety + w.wood * wood_score +
                     w.self_alive * (self.alive ? 1.0 : 0.0) + w.hunt * hunt;
  return std::clamp(raw, 0.0, 1.0) * 1.8 - 0.9;
}

}  // namespace pommer::agents
