#include <doctest.h>

#include "pommer/heuristic.hpp"

using namespace pommer;
using agents::heuristic_value;

namespace {

GameState plain_state() {
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

}  // namespace

TEST_CASE("terminal states score exactly +1 / -1 / 0") {
  GameState s = plain_state();

  SUBCASE("sole survivor") {
    s.agents[1].alive = s.agents[2].alive = s.agents[3].alive = false;
    CHECK(heuristic_value(s, 0) == 1.0);
    CHECK(heuristic_value(s, 1) == -1.0);
  }

  SUBCASE("dead while another lives on") {
    s.agents[0].alive = false;
    s.agents[2].alive = s.agents[3].alive = false;
    CHECK(heuristic_value(s, 0) == -1.0);
  }

  SUBCASE("timeout tie") {
    s.tick = s.max_ticks;
    CHECK(heuristic_value(s, 0) == 0.0);
  }
}

TEST_CASE("opening position matches the hand-computed blend") {
  GameState s = plain_state();
  // enemies_down = 0; power = (1/3 + 0 + 0) / 3; safety = 1 (no bombs);
  // wood = 0; self_alive = 1.
  const double raw = 0.5 * 0.0 + 0.15 * (1.0 / 9.0) + 0.15 * 1.0 + 0.1 * 0.0 + 0.1 * 1.0;
  const double expected = raw * 1.8 - 0.9;
  CHECK(heuristic_value(s, 0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("adjacent bomb drags the score down via the safety term") {
  GameState s = plain_state();
  const double before = heuristic_value(s, 0);
  Bomb b;
  b.pos = {0, 1};
  b.owner = 1;
  s.bombs.push_back(b);
  const double after = heuristic_value(s, 0);
  // safety goes 1 -> 1 - 1/2, a 0.15 * 0.5 * 1.8 drop.
  CHECK(before - after == doctest::Approx(0.15 * 0.5 * 1.8).epsilon(1e-9));
}

TEST_CASE("killed enemies raise the score more than anything else") {
  GameState s = plain_state();
  const double base = heuristic_value(s, 0);
  s.agents[2].alive = false;
  const double one_down = heuristic_value(s, 0);
  CHECK(one_down - base == doctest::Approx(0.5 * (1.0 / 3.0) * 1.8).epsilon(1e-9));
}

TEST_CASE("ongoing scores stay strictly inside (-1, 1)") {
  Rng rng(31337);
  GameConfig cfg;
  GameState s = generate_board(4, cfg);
  for (int t = 0; t < 200 && outcome(s).ongoing(); ++t) {
    std::array<Action, 4> acts;
    for (int i = 0; i < 4; ++i) acts[i] = static_cast<Action>(rng.next_int(kNumActions));
    advance_in_place(s, acts);
    if (!outcome(s).ongoing()) break;
    for (int i = 0; i < 4; ++i) {
      const double v = heuristic_value(s, i);
      CHECK(v > -1.0);
      CHECK(v < 1.0);
      CHECK(v >= -0.9);
      CHECK(v <= 0.9);
    }
  }
}

TEST_CASE("team mode counts only the opposing pair as enemies") {
  GameState s = plain_state();
  s.mode = GameMode::Team;
  for (int i = 0; i < 4; ++i) s.agents[i].team = static_cast<std::uint8_t>(i % 2);
  s.agents[3].alive = false;  // enemy of agents 0 and 2
  const double mine = heuristic_value(s, 0);
  s.agents[3].alive = true;
  s.agents[2].alive = false;  // teammate of 0: no enemy credit
  const double teammate_down = heuristic_value(s, 0);
  CHECK(mine > teammate_down);
}
