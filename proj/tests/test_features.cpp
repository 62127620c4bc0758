#include <doctest.h>

#include <cmath>
#include <vector>

#include "pommer/features.hpp"

using namespace pommer;
using namespace pommer::features;

namespace {

GameState empty_state() {
  GameState s;
  s.size = 11;
  s.board.fill(Tile::Passage);
  s.hidden.fill(Tile::Passage);
  s.flame.fill(0);
  for (int i = 0; i < kNumAgents; ++i) {
    s.agents[i].id = static_cast<std::uint8_t>(i);
    s.agents[i].pos = start_corner(i, s.size);
    s.agents[i].team = static_cast<std::uint8_t>(i);
  }
  return s;
}

// Straightforward exp/normalize, no max-subtraction: the independent check
// for moderate weights.
std::array<double, 6> oracle_softmax(const std::vector<double>& w) {
  std::array<double, 6> probs{};
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) total += std::exp(w[i]);
  for (std::size_t i = 0; i < w.size(); ++i) probs[i] = std::exp(w[i]) / total;
  return probs;
}

int feature_index(const FeatureSet& set, Feature f) {
  for (std::size_t i = 0; i < set.active.size(); ++i)
    if (set.active[i] == f) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("feature values follow the definitions") {
  GameState s = empty_state();
  s.agents[0].pos = {5, 5};
  const FeatureParams params;
  const int iBomb = feature_index(params.set, Feature::InvDistBomb);
  const int iEnemy = feature_index(params.set, Feature::InvDistEnemy);
  const int iWood = feature_index(params.set, Feature::InvDistWood);
  const int iStrength = feature_index(params.set, Feature::BombStrength);
  const int iKick = feature_index(params.set, Feature::CanKick);

  SUBCASE("bomb strength scaling: blast 2, ammo 1, cap 10 -> 0.1") {
    const auto f = extract_features(s, 0, params);
    CHECK(f[iStrength] == doctest::Approx(2.0 * 1.0 / (2.0 * 10.0)));
    CHECK(f[iKick] == 0.0);
  }

  SUBCASE("no wood anywhere -> 0") {
    const auto f = extract_features(s, 0, params);
    CHECK(f[iWood] == 0.0);
  }

  SUBCASE("adjacent bomb -> 1/(1+1)") {
    Bomb b;
    b.pos = {5, 6};
    b.owner = 1;
    s.bombs.push_back(b);
    const auto f = extract_features(s, 0, params);
    CHECK(f[iBomb] == doctest::Approx(0.5));
  }

  SUBCASE("enemy on the viewer's own cell -> 1") {
    s.agents[1].pos = {5, 5};  // transient overlap mid-resolution
    const auto f = extract_features(s, 0, params);
    CHECK(f[iEnemy] == doctest::Approx(1.0));
  }

  SUBCASE("diagonal enemy uses the Euclidean metric") {
    s.agents[1].pos = {8, 9};  // distance 5
    const auto f = extract_features(s, 0, params);
    CHECK(f[iEnemy] == doctest::Approx(1.0 / 6.0));
  }

  SUBCASE("everything lands in [0,1] on a real board") {
    const GameState g = generate_board(21, GameConfig{});
    for (int viewer = 0; viewer < 4; ++viewer) {
      const auto f = extract_features(g, viewer, params);
      REQUIRE(static_cast<int>(f.size()) == params.set.size());
      for (const double v : f) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
  }
}

TEST_CASE("observation features equal ground-truth features under full vision") {
  const GameState s = generate_board(33, GameConfig{});
  const FeatureParams params;
  for (int viewer = 0; viewer < 4; ++viewer) {
    const auto from_state = extract_features(s, viewer, params);
    const auto from_obs = extract_features(observe(s, viewer, kFullVision), params);
    REQUIRE(from_state.size() == from_obs.size());
    for (std::size_t i = 0; i < from_state.size(); ++i)
      CHECK(from_state[i] == doctest::Approx(from_obs[i]).epsilon(1e-12));
  }
}

TEST_CASE("fog hides objects from the features") {
  GameState s = empty_state();
  s.agents[0].pos = {5, 5};
  Bomb b;
  b.pos = {5, 9};  // outside a radius-2 window
  b.owner = 1;
  s.bombs.push_back(b);
  const FeatureParams params;
  const int iBomb = feature_index(params.set, Feature::InvDistBomb);
  const auto f = extract_features(observe(s, 0, 2), params);
  CHECK(f[iBomb] == 0.0);
}

TEST_CASE("weight matrix times features") {
  FeatureVector f;
  f.push_back(0.5);
  f.push_back(1.0);
  WeightMatrix w = WeightMatrix::zeros(2, 2);
  w.at(0, 0) = 1.0;
  w.at(0, 1) = 2.0;
  w.at(1, 0) = 0.0;
  w.at(1, 1) = 1.0;
  const auto out = action_weights(w, f);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == doctest::Approx(2.5));
  CHECK(out[1] == doctest::Approx(1.0));

  SUBCASE("all-zero matrix or features give zero weights") {
    const auto z = action_weights(WeightMatrix::zeros(2, 2), f);
    CHECK(z[0] == 0.0);
    CHECK(z[1] == 0.0);
  }

  SUBCASE("shape mismatch is a config error") {
    FeatureVector wrong;
    wrong.push_back(1.0);
    CHECK_THROWS_AS(action_weights(w, wrong), ConfigError);
  }
}

TEST_CASE("default policy distributions") {
  SUBCASE("six zero weights -> uniform") {
    const std::vector<double> w(6, 0.0);
    const auto dist = default_policy_distribution(w, ActionSpace::All6);
    for (const double p : dist.probs) CHECK(p == doctest::Approx(1.0 / 6.0));
  }

  SUBCASE("two zero weights -> bomb 0.5, each movement action 0.1") {
    const std::vector<double> w(2, 0.0);
    const auto dist = default_policy_distribution(w, ActionSpace::MovementBomb);
    for (int d = 0; d < 4; ++d) CHECK(dist.probs[d] == doctest::Approx(0.1));
    CHECK(dist.probs[static_cast<int>(Action::Stop)] == doctest::Approx(0.1));
    CHECK(dist.probs[static_cast<int>(Action::PlaceBomb)] == doctest::Approx(0.5));
  }

  SUBCASE("three-action space applies the x4 move factor") {
    const std::vector<double> w = {1.0, 0.5, 0.2};
    const auto dist = default_policy_distribution(w, ActionSpace::MoveStopBomb);
    const auto expected = oracle_softmax({4.0, 0.5, 0.2});
    for (int d = 0; d < 4; ++d)
      CHECK(dist.probs[d] == doctest::Approx(expected[0] / 4.0).epsilon(1e-9));
    CHECK(dist.probs[4] == doctest::Approx(expected[1]).epsilon(1e-9));
    CHECK(dist.probs[5] == doctest::Approx(expected[2]).epsilon(1e-9));
  }

  SUBCASE("six-weight case matches the plain softmax oracle") {
    const std::vector<double> w = {0.3, -1.2, 0.0, 2.0, 0.7, -0.5};
    const auto dist = default_policy_distribution(w, ActionSpace::All6);
    const auto expected = oracle_softmax(w);
    for (int i = 0; i < 6; ++i) CHECK(dist.probs[i] == doctest::Approx(expected[i]).epsilon(1e-9));
  }
}

TEST_CASE("softmax properties hold for random and extreme weights") {
  Rng rng(404);
  for (int trial = 0; trial < 2000; ++trial) {
    const ActionSpace space = static_cast<ActionSpace>(trial % 3 == 0   ? 0
                                                       : trial % 3 == 1 ? 1
                                                                        : 2);
    const int n = action_rows(space);
    std::vector<double> w(n);
    const double scale = trial % 5 == 0 ? 1e6 : (trial % 5 == 1 ? 1e-7 : 10.0);
    for (auto& x : w) x = rng.next_range(-scale, scale);

    const auto dist = default_policy_distribution(w, space);
    double sum = 0.0;
    for (const double p : dist.probs) {
      CHECK(p >= 0.0);
      sum += p;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));

    // Shift invariance of the softmax. The move row is scaled before the
    // softmax, so a uniform logit shift means shifting that row by c/factor.
    if (scale <= 10.0) {
      std::vector<double> shifted = w;
      const double shift = rng.next_range(-5.0, 5.0);
      for (int i = 0; i < n; ++i)
        shifted[i] += i == 0 ? shift / move_factor(space) : shift;
      const auto dist2 = default_policy_distribution(shifted, space);
      for (int i = 0; i < 6; ++i)
        CHECK(dist.probs[i] == doctest::Approx(dist2.probs[i]).epsilon(1e-9));

      // Monotonicity: bumping one effective weight grows its share. Skip
      // saturated cases where the share is already 1 to double precision.
      const int bumped = trial % n;
      std::vector<double> grown = w;
      grown[bumped] += 0.25;
      const auto dist3 = default_policy_distribution(grown, space);
      auto mass = [&](const ActionDistribution& d, int row) {
        if (space == ActionSpace::All6) return d.probs[row];
        if (space == ActionSpace::MoveStopBomb)
          return row == 0 ? d.probs[0] * 4 : (row == 1 ? d.probs[4] : d.probs[5]);
        return row == 0 ? d.probs[0] * 5 : d.probs[5];
      };
      if (mass(dist, bumped) < 1.0 - 1e-12)
        CHECK(mass(dist3, bumped) > mass(dist, bumped));
    }
  }
}

TEST_CASE("rollout action sampling") {
  GameState s = empty_state();
  s.agents[0].pos = {5, 5};

  SUBCASE("degenerate distribution always returns its action") {
    ActionDistribution dist;
    dist.probs[static_cast<int>(Action::Stop)] = 1.0;
    Rng rng(1);
    for (int i = 0; i < 50; ++i)
      CHECK(sample_rollout_action(dist, ActionSpace::All6, s, 0, rng) == Action::Stop);
  }

  SUBCASE("grouped move resamples into the only safe direction") {
    // Box the agent in except for one open cell; flames make another unsafe.
    s.board[s.cell(4, 5)] = Tile::Rigid;
    s.board[s.cell(5, 4)] = Tile::Rigid;
    s.flame[s.cell(6, 5)] = 2;
    // (5,6) stays open.
    ActionDistribution dist;
    for (int d = 0; d < 4; ++d) dist.probs[d] = 0.25;
    Rng rng(2);
    for (int i = 0; i < 50; ++i)
      CHECK(sample_rollout_action(dist, ActionSpace::MoveStopBomb, s, 0, rng) ==
            Action::Right);
  }

  SUBCASE("no safe direction keeps the sampled one") {
    s.board[s.cell(4, 5)] = Tile::Rigid;
    s.board[s.cell(5, 4)] = Tile::Rigid;
    s.board[s.cell(6, 5)] = Tile::Rigid;
    s.board[s.cell(5, 6)] = Tile::Rigid;
    ActionDistribution dist;
    dist.probs[static_cast<int>(Action::Up)] = 1.0;
    Rng rng(3);
    CHECK(sample_rollout_action(dist, ActionSpace::MovementBomb, s, 0, rng) == Action::Up);
  }

  SUBCASE("identical rng seeds give identical sequences") {
    ActionDistribution dist;
    for (int i = 0; i < 6; ++i) dist.probs[i] = 1.0 / 6.0;
    Rng a(77), b(77);
    for (int i = 0; i < 200; ++i)
      CHECK(sample_rollout_action(dist, ActionSpace::MovementBomb, s, 0, a) ==
            sample_rollout_action(dist, ActionSpace::MovementBomb, s, 0, b));
  }
}

TEST_CASE("feature sets by name") {
  CHECK(FeatureSet::by_name("all8").size() == 8);
  CHECK(FeatureSet::by_name("compact5").size() == 5);
  CHECK(FeatureSet::by_name("constant").size() == 1);
  CHECK_THROWS_AS(FeatureSet::by_name("nope"), ConfigError);

  // The state-blind set really is constant.
  const GameState s = generate_board(2, GameConfig{});
  FeatureParams params;
  params.set = FeatureSet::constant();
  const auto f = extract_features(s, 0, params);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == 1.0);
}
