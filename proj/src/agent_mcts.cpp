#include "search_core.hpp"

namespace pommer::agents {

Action MctsAgent::act(const Observation& obs, Rng& rng) {
  const detail::BudgetClock clock(spec_.budget);
  stats_ = SearchStats{};

  const GameState root_state = determinize(obs, rng);
  const int me = obs.viewer;
  root_ = std::make_unique<TreeNode>();

  // Uniform rollouts over the raw action set; the forward model resolves
  // blocked choices as Stop.
  auto uniform_pick = [&](const GameState&) {
    return static_cast<Action>(rng.next_int(kNumActions));
  };

  while (clock.allow(stats_.iterations)) {
    detail::run_iteration(*root_, root_state, me, spec_.mcts, spec_.heuristic,
                          uniform_pick, rng, stats_);
    stats_.iterations += 1;
  }
  stats_.decision_ms = clock.elapsed_ms();
  return detail::recommend(*root_);
}

}  // namespace pommer::agents
