#include <cmath>
#include <limits>

#include "pommer/agents.hpp"

namespace pommer::agents {

const char* kind_name(AgentKind kind) {
  switch (kind) {
    case AgentKind::Osla: return "osla";
    case AgentKind::Mcts: return "mcts";
    case AgentKind::Rhea: return "rhea";
    case AgentKind::Femcts: return "femcts";
  }
  return "?";
}

AgentKind kind_by_name(const std::string& name) {
  if (name == "osla") return AgentKind::Osla;
  if (name == "mcts") return AgentKind::Mcts;
  if (name == "rhea") return AgentKind::Rhea;
  if (name == "femcts") return AgentKind::Femcts;
  throw ConfigError("unknown agent kind '" + name + "' (osla, mcts, rhea, femcts)");
}

void apply_space_defaults(FemctsParams& params) {
  const bool grouped = params.space != features::ActionSpace::All6;
  params.evo.positive_bias = grouped ? 0.6 : 0.5;
  params.evo.clamp_non_negative = grouped;
}

std::unique_ptr<Agent> make_agent(const AgentSpec& spec) {
  switch (spec.kind) {
    case AgentKind::Osla: return std::make_unique<OslaAgent>(spec);
    case AgentKind::Mcts: return std::make_unique<MctsAgent>(spec);
    case AgentKind::Rhea: return std::make_unique<RheaAgent>(spec);
    case AgentKind::Femcts: return std::make_unique<FemctsAgent>(spec);
  }
  throw ConfigError("bad agent kind");
}

int uct_pick(const TreeNode& node, double exploration, Rng& rng) {
  // Unvisited children first, chosen uniformly.
  int unvisited = -1;
  int unvisited_count = 0;
  for (int a = 0; a < kNumActions; ++a) {
    if (node.children[a] && node.child_visits[a] == 0) {
      unvisited_count += 1;
      if (rng.next_int(unvisited_count) == 0) unvisited = a;
    }
  }
  if (unvisited >= 0) return unvisited;

  int best = -1;
  double best_score = -std::numeric_limits<double>::infinity();
  const double log_n = std::log(static_cast<double>(node.visits));
  for (int a = 0; a < kNumActions; ++a) {
    if (!node.children[a]) continue;
    const double score = node.child_value[a] +
                         exploration * std::sqrt(log_n / node.child_visits[a]);
    if (score > best_score) {
      best_score = score;
      best = a;
    }
  }
  return best;
}

Action most_visited_action(const TreeNode& root) {
  int best = 0;
  for (int a = 1; a < kNumActions; ++a)
    if (root.child_visits[a] > root.child_visits[best]) best = a;
  return static_cast<Action>(best);
}

GameState determinize(const Observation& obs, Rng& /*rng*/) {
  GameState s;
  s.size = obs.size;
  s.mode = obs.mode;
  s.tick = obs.tick;
  s.max_ticks = obs.max_ticks;
  s.flame_life = obs.flame_life;
  s.bomb_fuse = obs.bomb_fuse;
  s.initial_wood = obs.initial_wood;

  s.board.fill(Tile::Passage);
  s.hidden.fill(Tile::Passage);
  s.flame.fill(0);
  for (int c = 0; c < s.cells(); ++c) {
    s.board[c] = obs.board[c] == Tile::Fog ? Tile::Passage : obs.board[c];
    s.flame[c] = obs.flame[c];
  }
  if (obs.hidden_known) s.hidden = obs.hidden;

  s.bombs = obs.bombs;

  for (int i = 0; i < kNumAgents; ++i) s.agents[i] = obs.agents[i].state;
  // Guessed positions can collide with seen agents; shove the guess to the
  // first free walkable cell.
  for (int i = 0; i < kNumAgents; ++i) {
    if (obs.agents[i].position_known || !s.agents[i].alive) continue;
    bool clash = false;
    for (int j = 0; j < kNumAgents; ++j)
      if (j != i && s.agents[j].alive && s.agents[j].pos == s.agents[i].pos) clash = true;
    if (!clash) continue;
    for (int c = 0; c < s.cells() && clash; ++c) {
      const Coord cc{static_cast<std::int8_t>(c / s.size),
                     static_cast<std::int8_t>(c % s.size)};
      if (!is_walkable(s.board[c])) continue;
      bool taken = false;
      for (int j = 0; j < kNumAgents; ++j)
        if (j != i && s.agents[j].alive && s.agents[j].pos == cc) taken = true;
      if (!taken) {
        s.agents[i].pos = cc;
        clash = false;
      }
    }
  }
  return s;
}

}  // namespace pommer::agents
