#pragma once

#include <array>
#include <span>
#include <string>

#include "pommer/engine.hpp"

// State features and the softmax default policy that biases rollouts.
//
// An individual's genome is a weight matrix W (one row per effective action,
// one column per active feature). At a rollout state the policy computes
// per-action weights W*f and turns them into a distribution over the six
// concrete game actions with a numerically stable softmax. Grouped action
// spaces (move/stop/bomb, movement/bomb) scale the grouped row before the
// softmax and split its mass uniformly over the member actions.

namespace pommer::features {

enum class Feature : std::uint8_t {
  BombStrength = 0,  // blast * ammo / (2 * max bomb strength), clamped to [0,1]
  CanKick = 1,
  InvDistBomb = 2,   // 1/(d+1), straight-line distance to the nearest one
  InvDistPowerUp = 3,
  InvDistEnemy = 4,
  InvDistRigid = 5,
  InvDistFlame = 6,
  InvDistWood = 7,
  ConstantOne = 8,   // the state-blind variant: a single always-on feature
};

inline constexpr int kNumFeatureKinds = 9;

struct FeatureSet {
  InlineVec<Feature, kNumFeatureKinds> active;

  int size() const { return static_cast<int>(active.size()); }

  static FeatureSet all8();
  // The reduced set: kick flag plus distances to bombs, power-ups, enemies
  // and rigid walls.
  static FeatureSet compact5();
  static FeatureSet constant();
  static FeatureSet by_name(const std::string& name);  // throws ConfigError
};

struct FeatureParams {
  double max_bomb_strength = 10.0;
  FeatureSet set = FeatureSet::all8();
};

using FeatureVector = InlineVec<double, kNumFeatureKinds>;

// Every entry lands in [0, 1]; absent object classes contribute 0.
FeatureVector extract_features(const Observation& obs, const FeatureParams& params);
// Ground-truth overload used on the rollout hot path; agrees with the
// observation overload under full vision.
FeatureVector extract_features(const GameState& state, int agent_id,
                               const FeatureParams& params);

enum class ActionSpace : std::uint8_t {
  All6 = 0,          // one row per concrete action
  MoveStopBomb = 1,  // rows: move, stop, bomb; move row scaled by 4
  MovementBomb = 2,  // rows: movement (incl. stop), bomb; scaled by 5
};

inline int action_rows(ActionSpace s) {
  switch (s) {
    case ActionSpace::All6: return 6;
    case ActionSpace::MoveStopBomb: return 3;
    default: return 2;
  }
}
inline double move_factor(ActionSpace s) {
  switch (s) {
    case ActionSpace::All6: return 1.0;
    case ActionSpace::MoveStopBomb: return 4.0;
    default: return 5.0;
  }
}
ActionSpace action_space_by_rows(int n_effective);  // 6, 3 or 2; throws ConfigError

// Row-major fixed-capacity weight matrix; the evolved genome.
struct WeightMatrix {
  int rows = 0;
  int cols = 0;
  InlineVec<double, 6 * kNumFeatureKinds> w;

  static WeightMatrix zeros(int rows, int cols) {
    WeightMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.w.resize(static_cast<std::size_t>(rows) * cols, 0.0);
    return m;
  }
  double at(int r, int c) const { return w[static_cast<std::size_t>(r) * cols + c]; }
  double& at(int r, int c) { return w[static_cast<std::size_t>(r) * cols + c]; }
  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;
};

// weights[i] = sum_j W[i][j] * f[j]. Shape mismatch throws ConfigError.
InlineVec<double, 6> action_weights(const WeightMatrix& w, const FeatureVector& f);

struct ActionDistribution {
  std::array<double, kNumActions> probs{};
};

// Softmax over the (factor-scaled) effective-action weights, expanded onto
// the six concrete actions. Stable for arbitrarily large weight magnitudes.
ActionDistribution default_policy_distribution(std::span<const double> weights,
                                               ActionSpace space);

// Samples a concrete action. Under the grouped spaces a sampled directional
// move is re-drawn uniformly among "safe" directions — target walkable, no
// bomb, not aflame — keeping the original direction when none qualifies.
Action sample_rollout_action(const ActionDistribution& dist, ActionSpace space,
                             const GameState& state, int agent_id, Rng& rng);
Action sample_rollout_action(const ActionDistribution& dist, ActionSpace space,
                             const Observation& obs, Rng& rng);

}  // namespace pommer::features
