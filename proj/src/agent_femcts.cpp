#include "search_core.hpp"

namespace pommer::agents {

FemctsAgent::FemctsAgent(const AgentSpec& spec) : spec_(spec) {
  const int rows = features::action_rows(spec_.femcts.space);
  const int cols = spec_.femcts.feats.set.size();
  population_ = evo::init_population(spec_.femcts.evo, rows, cols, spec_.femcts.seed);
}

void FemctsAgent::start_game() { best_at_evolve_.reset(); }

const evo::Individual& FemctsAgent::best_individual() const {
  const evo::Individual* best = nullptr;
  for (const auto& m : population_.members) {
    if (m.evaluations == 0) continue;
    if (!best || m.fitness() > best->fitness()) best = &m;
  }
  if (best) return *best;
  if (best_at_evolve_) return *best_at_evolve_;
  return population_.members.front();
}

// One decision: a single shared tree, rollouts biased by each individual's
// weight matrix in turn. Every individual gets L tree iterations and is
// scored by their mean reward; after a full population sweep the population
// evolves and the loop continues until the budget runs out. A sweep cut off
// by the budget never triggers an evolve.
Action FemctsAgent::act(const Observation& obs, Rng& rng) {
  const detail::BudgetClock clock(spec_.budget);
  stats_ = SearchStats{};

  const GameState root_state = determinize(obs, rng);
  const int me = obs.viewer;
  root_ = std::make_unique<TreeNode>();

  const FemctsParams& p = spec_.femcts;
  const int L = p.evo.rollouts_per_individual;

  bool out_of_budget = false;
  while (!out_of_budget) {
    for (auto& ind : population_.members) {
      ind.reset_stats();
      for (int k = 0; k < L; ++k) {
        if (!clock.allow(stats_.iterations)) {
          out_of_budget = true;
          break;
        }
        auto biased_pick = [&](const GameState& state) {
          const auto f = features::extract_features(state, me, p.feats);
          const auto weights = features::action_weights(ind.weights, f);
          const auto dist = features::default_policy_distribution(
              std::span<const double>(weights.begin(), weights.size()), p.space);
          return features::sample_rollout_action(dist, p.space, state, me, rng);
        };
        const double delta =
            detail::run_iteration(*root_, root_state, me, spec_.mcts, spec_.heuristic,
                                  biased_pick, rng, stats_);
        stats_.iterations += 1;
        evo::record_reward(ind, delta);
      }
      if (out_of_budget) break;
    }
    if (out_of_budget) break;

    // Full sweep finished: remember the front-runner, then evolve.
    {
      const evo::Individual* best = nullptr;
      for (const auto& m : population_.members)
        if (!best || m.fitness() > best->fitness()) best = &m;
      best_at_evolve_ = *best;
    }
    if (p.evolve_enabled) {
      population_ = evo::evolve(population_, p.evo, rng);
      stats_.evolve_calls += 1;
    }
  }

  stats_.decision_ms = clock.elapsed_ms();
  return detail::recommend(*root_);
}

}  // namespace pommer::agents
