#pragma once

#include <chrono>

#include "pommer/agents.hpp"

// Open-loop UCT core shared by the plain and the evolutionary tree search.
// Nodes store statistics only; every iteration re-simulates from the root
// state, so the stochastic opponents are re-sampled on each descent.

namespace pommer::agents::detail {

class BudgetClock {
 public:
  explicit BudgetClock(const Budget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Always grants the first iteration so a recommendation exists.
  bool allow(long iters_done) const {
    if (budget_.iter_mode()) return iters_done < budget_.iters;
    if (iters_done == 0) return true;
    return elapsed_ms() < budget_.ms;
  }

  double elapsed_ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
};

inline Action random_legal(const GameState& s, int agent_id, Rng& rng) {
  const auto legal = legal_actions(s, agent_id);
  return legal[rng.next_int(static_cast<int>(legal.size()))];
}

inline void opponents_random(const GameState& s, int me,
                             std::array<Action, kNumAgents>& acts, Rng& rng) {
  for (int i = 0; i < kNumAgents; ++i) {
    if (i == me) continue;
    acts[i] = s.agents[i].alive ? random_legal(s, i, rng) : Action::Stop;
  }
}

// One selection/expansion/rollout/backup pass. RolloutPick is called with the
// current simulated state and must return the searcher's rollout action.
template <typename RolloutPick>
double run_iteration(TreeNode& root, const GameState& root_state, int me,
                     const MctsParams& params, const HeuristicWeights& hweights,
                     RolloutPick&& rollout_pick, Rng& rng, SearchStats& stats) {
  GameState state = root_state;
  TreeNode* node = &root;

  // (node, action) edges walked this iteration; the expanded leaf is not
  // included because its creation visit already counts. Capacity covers the
  // longest possible game.
  InlineVec<TreeNode*, 896> path_nodes;
  InlineVec<int, 896> path_actions;

  bool expanded = false;
  while (!expanded) {
    if (!outcome(state).ongoing()) break;
    if (path_nodes.size() == path_nodes.capacity()) break;

    int untried = -1;
    int untried_count = 0;
    for (int a = 0; a < kNumActions; ++a) {
      if (!node->children[a]) {
        untried_count += 1;
        if (rng.next_int(untried_count) == 0) untried = a;
      }
    }

    int action;
    if (untried >= 0) {
      action = untried;
      auto child = std::make_unique<TreeNode>();
      child->depth = node->depth + 1;
      node->children[action] = std::move(child);
      expanded = true;
    } else {
      action = uct_pick(*node, params.exploration, rng);
    }

    path_nodes.push_back(node);
    path_actions.push_back(action);

    std::array<Action, kNumAgents> acts{};
    acts.fill(Action::Stop);
    acts[me] = static_cast<Action>(action);
    opponents_random(state, me, acts, rng);
    advance_in_place(state, acts);
    node = node->children[action].get();
  }

  // Rollout below the tree.
  for (int d = 0; d < params.rollout_depth; ++d) {
    if (!outcome(state).ongoing()) break;
    std::array<Action, kNumAgents> acts{};
    acts.fill(Action::Stop);
    const Action mine = rollout_pick(state);
    acts[me] = mine;
    stats.rollout_actions[static_cast<int>(mine)] += 1;
    opponents_random(state, me, acts, rng);
    advance_in_place(state, acts);
  }

  const double delta = heuristic_value(state, me, hweights);

  for (std::size_t i = 0; i < path_nodes.size(); ++i) {
    TreeNode* n = path_nodes[i];
    const int a = path_actions[i];
    n->visits += 1;
    n->child_visits[a] += 1;
    n->child_value[a] += (delta - n->child_value[a]) / n->child_visits[a];
  }
  return delta;
}

inline Action recommend(const TreeNode& root) { return most_visited_action(root); }

}  // namespace pommer::agents::detail
