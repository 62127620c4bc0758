#pragma once

#include "pommer/engine.hpp"

namespace pommer::agents {

struct HeuristicWeights {
  double enemies_down = 0.5;
  double power = 0.1;
  double safety = 0.1;
  double wood = 0.1;
  double self_alive = 0.1;
  double hunt = 0.1;  // closeness to the nearest living enemy
};

// Reward in [-1, 1] for one agent's perspective. Terminal states score the
// agent's recorded result exactly (+1 win, 0 tie, -1 loss). Ongoing states
// blend eliminated enemies, collected power-ups, distance from the nearest
// bomb, wood cleared, own survival, and closeness to the hunt target, mapped
// into [-0.9, 0.9] so terminal results always dominate. Without the hunt
// term the agents never meet: every search dodges perfectly and all games
// run out the clock.
double heuristic_value(const GameState& state, int agent_id,
                       const HeuristicWeights& w = HeuristicWeights{});

}  // namespace pommer::agents
