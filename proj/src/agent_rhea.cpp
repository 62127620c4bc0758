#include <algorithm>
#include <numeric>

#include "search_core.hpp"

namespace pommer::agents {

namespace {

struct Sequence {
  std::vector<Action> genes;
  double fitness = 0.0;
};

double evaluate_sequence(const GameState& root, int me, const Sequence& seq,
                         const HeuristicWeights& hweights, Rng& rng) {
  GameState state = root;
  for (const Action a : seq.genes) {
    if (!outcome(state).ongoing()) break;
    std::array<Action, kNumAgents> acts{};
    acts.fill(Action::Stop);
    acts[me] = a;
    detail::opponents_random(state, me, acts, rng);
    advance_in_place(state, acts);
  }
  return heuristic_value(state, me, hweights);
}

Action random_action(Rng& rng) { return static_cast<Action>(rng.next_int(kNumActions)); }

}  // namespace

// Rolling-horizon evolution over fixed-length action sequences: evaluate the
// population against random opponents, keep the elite, breed the rest, and
// play the first gene of the best sequence found. The best sequence, shifted
// by one with a random tail, seeds the next decision.
Action RheaAgent::act(const Observation& obs, Rng& rng) {
  const detail::BudgetClock clock(spec_.budget);
  stats_ = SearchStats{};

  const GameState root = determinize(obs, rng);
  const int me = obs.viewer;
  const RheaParams& p = spec_.rhea;

  std::vector<Sequence> pop(p.population);
  for (auto& seq : pop) {
    seq.genes.resize(p.horizon);
    for (auto& g : seq.genes) g = random_action(rng);
  }
  if (p.shift_buffer && static_cast<int>(carry_.size()) == p.horizon && !pop.empty())
    pop[0].genes = carry_;

  Sequence best;
  bool have_best = false;
  bool out_of_budget = false;

  while (!out_of_budget) {
    for (auto& seq : pop) {
      if (!clock.allow(stats_.iterations)) {
        out_of_budget = true;
        break;
      }
      seq.fitness = evaluate_sequence(root, me, seq, spec_.heuristic, rng);
      stats_.iterations += 1;
      if (!have_best || seq.fitness > best.fitness) {
        best = seq;
        have_best = true;
      }
    }
    if (out_of_budget) break;

    std::stable_sort(pop.begin(), pop.end(),
                     [](const Sequence& a, const Sequence& b) { return a.fitness > b.fitness; });

    std::vector<Sequence> next(pop.begin(), pop.begin() + std::min(p.elites, p.population));
    while (static_cast<int>(next.size()) < p.population) {
      auto pick = [&]() -> const Sequence& {
        int best_idx = rng.next_int(p.population);
        for (int k = 1; k < p.tournament; ++k) {
          const int cand = rng.next_int(p.population);
          if (pop[cand].fitness > pop[best_idx].fitness) best_idx = cand;
        }
        return pop[best_idx];
      };
      const Sequence& p1 = pick();
      const Sequence& p2 = pick();
      Sequence child;
      child.genes.resize(p.horizon);
      for (int g = 0; g < p.horizon; ++g)
        child.genes[g] = rng.chance(0.5) ? p1.genes[g] : p2.genes[g];
      child.genes[rng.next_int(p.horizon)] = random_action(rng);  // one-gene mutation
      next.push_back(std::move(child));
    }
    pop = std::move(next);
  }

  stats_.decision_ms = clock.elapsed_ms();
  if (!have_best) return Action::Stop;

  if (p.shift_buffer) {
    carry_.assign(best.genes.begin() + 1, best.genes.end());
    carry_.push_back(random_action(rng));
  }
  return best.genes.front();
}

}  // namespace pommer::agents
