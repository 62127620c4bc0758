#pragma once

#include <memory>
#include <optional>
#include <string>

#include "pommer/evo.hpp"
#include "pommer/features.hpp"
#include "pommer/heuristic.hpp"

// The four decision-makers. All of them act on an Observation: the view is
// first completed into a concrete state (determinize), searched under a
// wall-clock or iteration budget, and the chosen concrete action returned.
// Opponents are modeled as uniform random over their legal actions.

namespace pommer::agents {

struct Budget {
  double ms = 40.0;
  long iters = 0;  // > 0 switches to deterministic iteration-capped mode
  bool iter_mode() const { return iters > 0; }
};

struct MctsParams {
  double exploration = 1.41;
  int rollout_depth = 12;  // past the bomb fuse, so rollouts see placed bombs pop
};

struct RheaParams {
  int horizon = 10;
  int population = 10;
  int elites = 1;
  int tournament = 2;
  bool shift_buffer = true;
};

struct FemctsParams {
  evo::EvoConfig evo;
  features::ActionSpace space = features::ActionSpace::MovementBomb;
  features::FeatureParams feats;
  std::optional<features::WeightMatrix> seed;
  bool evolve_enabled = true;  // off only for diagnostics / baselines
};

// Grouped action spaces need non-negative weights, kept there by a
// positively biased mutation.
void apply_space_defaults(FemctsParams& params);

enum class AgentKind : std::uint8_t { Osla, Mcts, Rhea, Femcts };

const char* kind_name(AgentKind kind);
AgentKind kind_by_name(const std::string& name);  // throws ConfigError

struct AgentSpec {
  AgentKind kind = AgentKind::Mcts;
  Budget budget;
  MctsParams mcts;
  RheaParams rhea;
  FemctsParams femcts;
  HeuristicWeights heuristic;
};

struct SearchStats {
  long iterations = 0;
  long evolve_calls = 0;
  std::array<long, kNumActions> rollout_actions{};
  double decision_ms = 0.0;
};

class Agent {
 public:
  virtual ~Agent() = default;
  virtual AgentKind kind() const = 0;
  virtual Action act(const Observation& obs, Rng& rng) = 0;
  virtual void start_game() {}
  // Counters from the most recent act() call.
  const SearchStats& stats() const { return stats_; }

 protected:
  SearchStats stats_;
};

std::unique_ptr<Agent> make_agent(const AgentSpec& spec);

// Completes an observation into a concrete state the forward model can run:
// fog becomes passage, unseen-but-alive agents stand at their start corners
// with starting gear, unseen bombs simply do not exist. Under full vision
// this reproduces the ground truth exactly.
GameState determinize(const Observation& obs, Rng& rng);

// Search tree node. visits counts the creation visit plus one per traversal
// out of the node, so visits == 1 + sum(child_visits) always holds.
struct TreeNode {
  int depth = 0;
  int visits = 1;
  std::array<int, kNumActions> child_visits{};
  std::array<double, kNumActions> child_value{};  // running mean of backed-up rewards
  std::array<std::unique_ptr<TreeNode>, kNumActions> children;
};

// UCB1 over the node's children: value + c * sqrt(ln N / N(a)). Children that
// exist but have never been visited are picked first (uniformly at random);
// value ties go to the lower action index.
int uct_pick(const TreeNode& node, double exploration, Rng& rng);

// The recommendation rule: most root visits, lowest index on ties.
Action most_visited_action(const TreeNode& root);

class MctsAgent : public Agent {
 public:
  explicit MctsAgent(const AgentSpec& spec) : spec_(spec) {}
  AgentKind kind() const override { return AgentKind::Mcts; }
  Action act(const Observation& obs, Rng& rng) override;
  const TreeNode* last_tree() const { return root_.get(); }

 private:
  AgentSpec spec_;
  std::unique_ptr<TreeNode> root_;
};

class OslaAgent : public Agent {
 public:
  explicit OslaAgent(const AgentSpec& spec) : spec_(spec) {}
  AgentKind kind() const override { return AgentKind::Osla; }
  Action act(const Observation& obs, Rng& rng) override;

 private:
  AgentSpec spec_;
};

class RheaAgent : public Agent {
 public:
  explicit RheaAgent(const AgentSpec& spec) : spec_(spec) {}
  AgentKind kind() const override { return AgentKind::Rhea; }
  Action act(const Observation& obs, Rng& rng) override;
  void start_game() override { carry_.clear(); }

 private:
  AgentSpec spec_;
  std::vector<Action> carry_;  // shifted best sequence from the last decision
};

class FemctsAgent : public Agent {
 public:
  explicit FemctsAgent(const AgentSpec& spec);
  AgentKind kind() const override { return AgentKind::Femcts; }
  Action act(const Observation& obs, Rng& rng) override;
  void start_game() override;

  // The population persists across decisions and across games.
  const evo::Population& population() const { return population_; }
  void set_population(evo::Population pop) { population_ = std::move(pop); }
  // Best evaluated individual right now, falling back to the strongest one
  // seen at an evolve boundary this game. Used for seed capture.
  const evo::Individual& best_individual() const;

  const TreeNode* last_tree() const { return root_.get(); }

 private:
  AgentSpec spec_;
  evo::Population population_;
  std::optional<evo::Individual> best_at_evolve_;
  std::unique_ptr<TreeNode> root_;
};

}  // namespace pommer::agents
