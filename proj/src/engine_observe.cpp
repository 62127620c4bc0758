#include <cstdlib>

#include "pommer/engine.hpp"

namespace pommer {

Observation observe(const GameState& s, int agent_id, int vision) {
  Observation o;
  o.viewer = static_cast<std::uint8_t>(agent_id);
  o.size = s.size;
  o.mode = s.mode;
  o.tick = s.tick;
  o.max_ticks = s.max_ticks;
  o.flame_life = s.flame_life;
  o.bomb_fuse = s.bomb_fuse;
  o.initial_wood = s.initial_wood;
  o.vision = static_cast<std::int8_t>(vision);

  const Coord eye = s.agents[agent_id].pos;
  auto visible = [&](Coord c) {
    if (vision < 0) return true;
    return std::abs(c.row - eye.row) <= vision && std::abs(c.col - eye.col) <= vision;
  };

  o.board.fill(Tile::Fog);
  o.flame.fill(0);
  for (int r = 0; r < s.size; ++r) {
    for (int c = 0; c < s.size; ++c) {
      const Coord cc{static_cast<std::int8_t>(r), static_cast<std::int8_t>(c)};
      if (!visible(cc)) continue;
      o.board[o.cell(cc)] = s.tile(cc);
      o.flame[o.cell(cc)] = s.flame[s.cell(cc)];
    }
  }

  for (const auto& b : s.bombs)
    if (visible(b.pos)) o.bombs.push_back(b);

  for (int i = 0; i < kNumAgents; ++i) {
    const auto& a = s.agents[i];
    auto& view = o.agents[i];
    if (i == agent_id || visible(a.pos)) {
      view.state = a;
      view.position_known = true;
    } else {
      // Deaths and team membership are public; position and gear of an unseen
      // agent are not, so fall back to the start corner and starting stats.
      view.state = AgentState{};
      view.state.id = a.id;
      view.state.alive = a.alive;
      view.state.team = a.team;
      view.state.pos = start_corner(i, s.size);
      view.position_known = false;
    }
  }

  if (vision < 0) {
    o.hidden = s.hidden;
    o.hidden_known = true;
  }
  return o;
}

}  // namespace pommer
