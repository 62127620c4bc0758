#include <doctest.h>

#include "pommer/engine.hpp"
#include "reference_model.hpp"

using namespace pommer;

// The engine against the naive rules interpreter: random mini-board games,
// compared state-for-state after every tick.
TEST_CASE("engine agrees with the reference interpreter on random games") {
  GameConfig cfg;
  cfg.board_size = 6;
  cfg.num_rigid = 8;
  cfg.num_wood = 8;
  cfg.max_ticks = 60;

  Rng rng(20240601);
  long steps = 0;
  int boards = 0;
  while (steps < 10000) {
    boards += 1;
    GameState s = generate_board(rng.next_u64(), cfg);
    // Hand out kicks and ammo now and then so sliding bombs get exercised.
    if (boards % 3 == 0)
      for (auto& a : s.agents) a.can_kick = true;
    if (boards % 4 == 0)
      for (auto& a : s.agents) a.ammo = 2;

    while (outcome(s).ongoing()) {
      std::array<Action, 4> acts;
      for (int i = 0; i < 4; ++i) acts[i] = static_cast<Action>(rng.next_int(kNumActions));
      const GameState mine = step(s, acts);
      const GameState theirs = refmodel::ref_step(s, acts);
      if (!(mine == theirs)) {
        CAPTURE(boards);
        CAPTURE(s.tick);
        REQUIRE(mine == theirs);
      }
      s = mine;
      steps += 1;
    }
  }
  CHECK(steps >= 10000);
}
