#include <algorithm>
#include <cmath>
#include <limits>

#include "pommer/features.hpp"

namespace pommer::features {

namespace {

double inv_dist(double best_sq) {
  if (best_sq == std::numeric_limits<double>::infinity()) return 0.0;
  return 1.0 / (std::sqrt(best_sq) + 1.0);
}

double dist_sq(Coord a, Coord b) {
  const double dr = a.row - b.row;
  const double dc = a.col - b.col;
  return dr * dr + dc * dc;
}

// Shared feature math over either a GameState or an Observation. The Src
// concept here is informal: cells(), tile_at(), flame_at(), bombs(), and
// agent views.
struct StateSource {
  const GameState& s;
  int viewer;
  int size() const { return s.size; }
  Tile tile_at(int r, int c) const { return s.board[r * s.size + c]; }
  bool flame_at(int r, int c) const { return s.flame[r * s.size + c] > 0; }
  const InlineVec<Bomb, kMaxBombs>& bombs() const { return s.bombs; }
  const AgentState& self() const { return s.agents[viewer]; }
  bool enemy_at(int i, Coord& out) const {
    const auto& a = s.agents[i];
    if (!a.alive || !are_enemies(a, self())) return false;
    out = a.pos;
    return true;
  }
};

struct ObsSource {
  const Observation& o;
  int size() const { return o.size; }
  Tile tile_at(int r, int c) const { return o.board[r * o.size + c]; }
  bool flame_at(int r, int c) const { return o.flame[r * o.size + c] > 0; }
  const InlineVec<Bomb, kMaxBombs>& bombs() const { return o.bombs; }
  const AgentState& self() const { return o.self(); }
  bool enemy_at(int i, Coord& out) const {
    const auto& v = o.agents[i];
    if (!v.position_known || !v.state.alive || !are_enemies(v.state, self())) return false;
    out = v.state.pos;
    return true;
  }
};

template <typename Src>
FeatureVector extract(const Src& src, const FeatureParams& params) {
  const Coord eye = src.self().pos;
  const int n = src.size();

  constexpr double kInf = std::numeric_limits<double>::infinity();
  double best_powerup = kInf, best_rigid = kInf, best_flame = kInf, best_wood = kInf;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Coord cc{static_cast<std::int8_t>(r), static_cast<std::int8_t>(c)};
      const double d = dist_sq(eye, cc);
      switch (src.tile_at(r, c)) {
        case Tile::Rigid: best_rigid = std::min(best_rigid, d); break;
        case Tile::Wood: best_wood = std::min(best_wood, d); break;
        case Tile::ExtraBomb:
        case Tile::IncrRange:
        case Tile::Kick: best_powerup = std::min(best_powerup, d); break;
        default: break;
      }
      if (src.flame_at(r, c)) best_flame = std::min(best_flame, d);
    }
  }

  double best_bomb = kInf;
  for (const auto& b : src.bombs()) best_bomb = std::min(best_bomb, dist_sq(eye, b.pos));

  double best_enemy = kInf;
  for (int i = 0; i < kNumAgents; ++i) {
    Coord pos;
    if (src.enemy_at(i, pos)) best_enemy = std::min(best_enemy, dist_sq(eye, pos));
  }

  const AgentState& self = src.self();
  const double strength =
      std::clamp(self.blast_strength * static_cast<double>(self.ammo) /
                     (2.0 * params.max_bomb_strength),
                 0.0, 1.0);

  FeatureVector out;
  for (const Feature f : params.set.active) {
    switch (f) {
      case Feature::BombStrength: out.push_back(strength); break;
      case Feature::CanKick: out.push_back(self.can_kick ? 1.0 : 0.0); break;
      case Feature::InvDistBomb: out.push_back(inv_dist(best_bomb)); break;
      case Feature::InvDistPowerUp: out.push_back(inv_dist(best_powerup)); break;
      case Feature::InvDistEnemy: out.push_back(inv_dist(best_enemy)); break;
      case Feature::InvDistRigid: out.push_back(inv_dist(best_rigid)); break;
      case Feature::InvDistFlame: out.push_back(inv_dist(best_flame)); break;
      case Feature::InvDistWood: out.push_back(inv_dist(best_wood)); break;
      case Feature::ConstantOne: out.push_back(1.0); break;
    }
  }
  return out;
}

}  // namespace

FeatureSet FeatureSet::all8() {
  FeatureSet s;
  for (int i = 0; i < 8; ++i) s.active.push_back(static_cast<Feature>(i));
  return s;
}

FeatureSet FeatureSet::compact5() {
  FeatureSet s;
  s.active.push_back(Feature::CanKick);
  s.active.push_back(Feature::InvDistBomb);
  s.active.push_back(Feature::InvDistPowerUp);
  s.active.push_back(Feature::InvDistEnemy);
  s.active.push_back(Feature::InvDistRigid);
  return s;
}

FeatureSet FeatureSet::constant() {
  FeatureSet s;
  s.active.push_back(Feature::ConstantOne);
  return s;
}

FeatureSet FeatureSet::by_name(const std::string& name) {
  if (name == "all8") return all8();
  if (name == "compact5") return compact5();
  if (name == "constant") return constant();
  throw ConfigError("unknown feature set '" + name + "' (all8, compact5, constant)");
}

ActionSpace action_space_by_rows(int n_effective) {
  switch (n_effective) {
    case 6: return ActionSpace::All6;
    case 3: return ActionSpace::MoveStopBomb;
    case 2: return ActionSpace::MovementBomb;
    default: throw ConfigError("effective action count must be 2, 3 or 6");
  }
}

FeatureVector extract_features(const Observation& obs, const FeatureParams& params) {
  return extract(ObsSource{obs}, params);
}

FeatureVector extract_features(const GameState& state, int agent_id,
                               const FeatureParams& params) {
  return extract(StateSource{state, agent_id}, params);
}

InlineVec<double, 6> action_weights(const WeightMatrix& w, const FeatureVector& f) {
  if (w.cols != static_cast<int>(f.size()) || w.rows < 1 || w.rows > 6)
    throw ConfigError("weight matrix shape does not match the feature vector");
  InlineVec<double, 6> out;
  for (int i = 0; i < w.rows; ++i) {
    double acc = 0.0;
    for (int j = 0; j < w.cols; ++j) acc += w.at(i, j) * f[j];
    out.push_back(acc);
  }
  return out;
}

ActionDistribution default_policy_distribution(std::span<const double> weights,
                                               ActionSpace space) {
  const int n = action_rows(space);
  if (static_cast<int>(weights.size()) != n)
    throw ConfigError("weight count does not match the action space");

  std::array<double, 6> scaled{};
  for (int i = 0; i < n; ++i) scaled[i] = weights[i];
  scaled[0] *= move_factor(space);  // row 0 is the grouped movement row

  double max_w = scaled[0];
  for (int i = 1; i < n; ++i) max_w = std::max(max_w, scaled[i]);
  double total = 0.0;
  std::array<double, 6> e{};
  for (int i = 0; i < n; ++i) {
    e[i] = std::exp(scaled[i] - max_w);
    total += e[i];
  }

  ActionDistribution dist;
  switch (space) {
    case ActionSpace::All6:
      for (int i = 0; i < 6; ++i) dist.probs[i] = e[i] / total;
      break;
    case ActionSpace::MoveStopBomb: {
      const double move = e[0] / total, stop = e[1] / total, bomb = e[2] / total;
      for (int d = 0; d < 4; ++d) dist.probs[d] = move / 4.0;
      dist.probs[static_cast<int>(Action::Stop)] = stop;
      dist.probs[static_cast<int>(Action::PlaceBomb)] = bomb;
      break;
    }
    case ActionSpace::MovementBomb: {
      const double movement = e[0] / total, bomb = e[1] / total;
      for (int d = 0; d < 4; ++d) dist.probs[d] = movement / 5.0;
      dist.probs[static_cast<int>(Action::Stop)] = movement / 5.0;
      dist.probs[static_cast<int>(Action::PlaceBomb)] = bomb;
      break;
    }
  }
  return dist;
}

namespace {

int sample_index(const std::array<double, 6>& probs, Rng& rng) {
  const double u = rng.next_double();
  double acc = 0.0;
  for (int i = 0; i < 6; ++i) {
    acc += probs[i];
    if (u < acc) return i;
  }
  return 5;  // guard against rounding at the top end
}

template <typename Ctx>
Action resample_safe_direction(int sampled_dir, const Ctx& ctx, Coord pos, Rng& rng) {
  InlineVec<int, 4> safe;
  for (int d = 0; d < 4; ++d) {
    const Coord t = moved(pos, d);
    if (!ctx.in_bounds(t)) continue;
    if (!is_walkable(ctx.tile_of(t)) || ctx.has_bomb(t) || ctx.has_flame(t)) continue;
    safe.push_back(d);
  }
  if (safe.empty()) return static_cast<Action>(sampled_dir);
  return static_cast<Action>(safe[rng.next_int(static_cast<int>(safe.size()))]);
}

struct StateCtx {
  const GameState& s;
  bool in_bounds(Coord c) const { return s.in_bounds(c); }
  Tile tile_of(Coord c) const { return s.tile(c); }
  bool has_bomb(Coord c) const { return s.bomb_at(c) != nullptr; }
  bool has_flame(Coord c) const { return s.flame[s.cell(c)] > 0; }
};

struct ObsCtx {
  const Observation& o;
  bool in_bounds(Coord c) const { return o.in_bounds(c); }
  Tile tile_of(Coord c) const { return o.board[o.cell(c)]; }
  bool has_bomb(Coord c) const {
    for (const auto& b : o.bombs)
      if (b.pos == c) return true;
    return false;
  }
  bool has_flame(Coord c) const { return o.flame[o.cell(c)] > 0; }
};

template <typename Ctx>
Action sample_impl(const ActionDistribution& dist, ActionSpace space, const Ctx& ctx,
                   Coord pos, Rng& rng) {
  const int idx = sample_index(dist.probs, rng);
  const Action a = static_cast<Action>(idx);
  if (space == ActionSpace::All6 || !is_move(a)) return a;
  return resample_safe_direction(idx, ctx, pos, rng);
}

}  // namespace

Action sample_rollout_action(const ActionDistribution& dist, ActionSpace space,
                             const GameState& state, int agent_id, Rng& rng) {
  return sample_impl(dist, space, StateCtx{state}, state.agents[agent_id].pos, rng);
}

Action sample_rollout_action(const ActionDistribution& dist, ActionSpace space,
                             const Observation& obs, Rng& rng) {
  return sample_impl(dist, space, ObsCtx{obs}, obs.self().pos, rng);
}

}  // namespace pommer::features
