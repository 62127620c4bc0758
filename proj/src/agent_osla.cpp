#include "search_core.hpp"

namespace pommer::agents {

// Greedy one-tick lookahead: simulate each legal action with all opponents
// standing still, keep the best heuristic value, break ties at random.
Action OslaAgent::act(const Observation& obs, Rng& rng) {
  const detail::BudgetClock clock(spec_.budget);
  stats_ = SearchStats{};

  const GameState root = determinize(obs, rng);
  const int me = obs.viewer;

  InlineVec<Action, kNumActions> best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (const Action a : legal_actions(root, me)) {
    std::array<Action, kNumAgents> acts{};
    acts.fill(Action::Stop);
    acts[me] = a;
    GameState next = root;
    advance_in_place(next, acts);
    const double v = heuristic_value(next, me, spec_.heuristic);
    stats_.iterations += 1;
    if (v > best_value) {
      best_value = v;
      best.clear();
    }
    if (v == best_value) best.push_back(a);
  }
  stats_.decision_ms = clock.elapsed_ms();
  if (best.empty()) return Action::Stop;
  return best[rng.next_int(static_cast<int>(best.size()))];
}

}  // namespace pommer::agents
