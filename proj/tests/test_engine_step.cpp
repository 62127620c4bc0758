#include <doctest.h>

#include "pommer/engine.hpp"

using namespace pommer;

namespace {

// Empty 11x11 arena with agents parked in the corners; a blank canvas the
// cases below draw on.
GameState blank_state() {
  GameState s;
  s.size = 11;
  s.max_ticks = 800;
  s.flame_life = 2;
  s.bomb_fuse = 10;
  s.board.fill(Tile::Passage);
  s.hidden.fill(Tile::Passage);
  s.flame.fill(0);
  for (int i = 0; i < kNumAgents; ++i) {
    auto& a = s.agents[i];
    a.id = static_cast<std::uint8_t>(i);
    a.pos = start_corner(i, s.size);
    a.alive = true;
    a.ammo = 1;
    a.blast_strength = 2;
    a.team = static_cast<std::uint8_t>(i);
  }
  return s;
}

std::array<Action, 4> all_stop() {
  return {Action::Stop, Action::Stop, Action::Stop, Action::Stop};
}

std::array<Action, 4> only(int agent, Action a) {
  auto acts = all_stop();
  acts[agent] = a;
  return acts;
}

int flame_count(const GameState& s) {
  int n = 0;
  for (int c = 0; c < s.cells(); ++c) n += s.flame[c] > 0 ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("all-stop tick leaves positions and advances the clock") {
  GameState s = blank_state();
  const GameState next = step(s, all_stop());
  CHECK(next.tick == s.tick + 1);
  for (int i = 0; i < 4; ++i) CHECK(next.agents[i].pos == s.agents[i].pos);
  CHECK(next.bombs.empty());
}

TEST_CASE("step on a terminal state is rejected") {
  GameState s = blank_state();
  s.agents[1].alive = s.agents[2].alive = s.agents[3].alive = false;
  CHECK_THROWS_AS(step(s, all_stop()), std::invalid_argument);
}

TEST_CASE("a bomb placed at tick t explodes during the step beginning at t+10") {
  GameState s = blank_state();
  s.agents[0].pos = {5, 5};
  s = step(s, only(0, Action::PlaceBomb));  // placed during the tick-0 step
  CHECK(s.bombs.size() == 1);
  CHECK(s.bombs[0].fuse == 10);
  CHECK(s.agents[0].ammo == 0);

  // Walk the owner clear of the blast.
  s = step(s, only(0, Action::Up));
  s = step(s, only(0, Action::Up));
  for (int tick = 3; tick <= 10; ++tick) {
    CAPTURE(tick);
    CHECK(s.bombs.size() == 1);
    s = step(s, all_stop());
  }
  // That last call was the step beginning at tick 10.
  CHECK(s.tick == 11);
  CHECK(s.bombs.empty());
  CHECK(s.flame[s.cell(Coord{5, 5})] > 0);
  CHECK(s.agents[0].ammo == 1);  // refunded on detonation
}

TEST_CASE("placing again while the first bomb ticks resolves as stop") {
  GameState s = blank_state();
  s.agents[0].pos = {5, 5};
  s = step(s, only(0, Action::PlaceBomb));
  CHECK(s.agents[0].ammo == 0);
  s = step(s, only(0, Action::Right));  // off the bomb
  s = step(s, only(0, Action::PlaceBomb));
  CHECK(s.bombs.size() == 1);  // second attempt did nothing
  CHECK(s.agents[0].ammo == 0);
}

TEST_CASE("strength-2 blast covers exactly the plus shape") {
  GameState s = blank_state();
  Bomb b;
  b.pos = {5, 5};
  b.owner = 0;
  b.blast_strength = 2;
  b.fuse = 1;  // explodes on the next step
  s.bombs.push_back(b);
  s.agents[0].ammo = 0;

  s = step(s, all_stop());
  CHECK(flame_count(s) == 5);
  for (const Coord c : {Coord{5, 5}, Coord{4, 5}, Coord{6, 5}, Coord{5, 4}, Coord{5, 6}})
    CHECK(s.flame[s.cell(c)] == 2);
  CHECK(s.agents[0].ammo == 1);
}

TEST_CASE("rigid blocks the ray, wood takes the hit and stops it") {
  GameState s = blank_state();
  s.board[s.cell(4, 5)] = Tile::Rigid;
  s.board[s.cell(5, 6)] = Tile::Wood;
  s.hidden[s.cell(5, 6)] = Tile::Kick;
  Bomb b;
  b.pos = {5, 5};
  b.owner = 0;
  b.blast_strength = 3;  // reaches two cells out
  b.fuse = 1;
  s.bombs.push_back(b);

  s = step(s, all_stop());
  CHECK(s.flame[s.cell(4, 5)] == 0);      // rigid shields itself
  CHECK(s.flame[s.cell(3, 5)] == 0);      // and everything behind it
  CHECK(s.flame[s.cell(5, 6)] > 0);       // wood burns
  CHECK(s.flame[s.cell(5, 7)] == 0);      // but absorbs the ray
  CHECK(s.flame[s.cell(7, 5)] > 0);       // open ray reaches distance 2
  CHECK(s.board[s.cell(4, 5)] == Tile::Rigid);
  CHECK(s.board[s.cell(5, 6)] == Tile::Kick);  // wood consumed, item uncovered

  s = step(s, all_stop());                 // flames persist one more tick
  CHECK(s.flame[s.cell(5, 6)] == 1);
  s = step(s, all_stop());                 // now they expire
  CHECK(s.flame[s.cell(5, 6)] == 0);
  CHECK(s.board[s.cell(5, 6)] == Tile::Kick);
}

TEST_CASE("chained bombs explode in the same tick") {
  GameState s = blank_state();
  Bomb a;
  a.pos = {5, 5};
  a.owner = 0;
  a.blast_strength = 2;
  a.fuse = 1;
  Bomb b;
  b.pos = {5, 6};
  b.owner = 1;
  b.blast_strength = 2;
  b.fuse = 9;  // would normally wait
  s.bombs.push_back(a);
  s.bombs.push_back(b);

  s = step(s, all_stop());
  CHECK(s.bombs.empty());
  CHECK(s.flame[s.cell(5, 7)] > 0);  // second bomb's blast happened too
}

TEST_CASE("an agent walking into flames dies at end of tick") {
  GameState s = blank_state();
  s.agents[0].pos = {5, 5};
  s.flame[s.cell(5, 6)] = 2;
  s = step(s, only(0, Action::Right));
  CHECK_FALSE(s.agents[0].alive);
  CHECK(s.agents[0].pos == Coord{5, 6});
}

TEST_CASE("fresh blast kills whoever stands in it, mover escapes") {
  GameState s = blank_state();
  s.agents[0].pos = {5, 4};  // adjacent to the bomb, will stand still
  s.agents[1].pos = {4, 5};  // adjacent, will step away
  Bomb b;
  b.pos = {5, 5};
  b.owner = 2;
  b.blast_strength = 2;
  b.fuse = 1;
  s.bombs.push_back(b);

  s = step(s, only(1, Action::Up));
  CHECK_FALSE(s.agents[0].alive);
  CHECK(s.agents[1].alive);
}

TEST_CASE("movement conflicts revert both agents") {
  GameState s = blank_state();
  s.agents[0].pos = {5, 4};
  s.agents[1].pos = {5, 6};

  SUBCASE("contested cell") {
    auto acts = all_stop();
    acts[0] = Action::Right;
    acts[1] = Action::Left;  // both want (5,5)
    s = step(s, acts);
    CHECK(s.agents[0].pos == Coord{5, 4});
    CHECK(s.agents[1].pos == Coord{5, 6});
  }

  SUBCASE("swap") {
    s.agents[1].pos = {5, 5};
    auto acts = all_stop();
    acts[0] = Action::Right;
    acts[1] = Action::Left;
    s = step(s, acts);
    CHECK(s.agents[0].pos == Coord{5, 4});
    CHECK(s.agents[1].pos == Coord{5, 5});
  }

  SUBCASE("move into a stationary agent") {
    s.agents[1].pos = {5, 5};
    s = step(s, only(0, Action::Right));
    CHECK(s.agents[0].pos == Coord{5, 4});
  }

  SUBCASE("follow a vacating agent") {
    s.agents[1].pos = {5, 5};
    auto acts = all_stop();
    acts[0] = Action::Right;
    acts[1] = Action::Right;
    s = step(s, acts);
    CHECK(s.agents[0].pos == Coord{5, 5});
    CHECK(s.agents[1].pos == Coord{5, 6});
  }
}

TEST_CASE("kicked bombs slide until obstructed") {
  GameState s = blank_state();
  s.agents[0].pos = {5, 4};
  s.agents[0].can_kick = true;
  Bomb b;
  b.pos = {5, 5};
  b.owner = 1;
  b.blast_strength = 2;
  b.fuse = 9;
  s.bombs.push_back(b);
  s.board[s.cell(5, 8)] = Tile::Rigid;

  s = step(s, only(0, Action::Right));
  CHECK(s.agents[0].pos == Coord{5, 5});       // kicker takes the bomb's cell
  CHECK(s.bombs[0].pos == Coord{5, 6});        // bomb moved one cell
  CHECK(s.bombs[0].dir == static_cast<int>(Action::Right));

  s = step(s, all_stop());
  CHECK(s.bombs[0].pos == Coord{5, 7});
  s = step(s, all_stop());
  CHECK(s.bombs[0].pos == Coord{5, 7});        // rigid wall stops it
  CHECK(s.bombs[0].dir == -1);
}

TEST_CASE("non-kicker bumping a bomb stays put") {
  GameState s = blank_state();
  s.agents[0].pos = {5, 4};
  Bomb b;
  b.pos = {5, 5};
  b.owner = 1;
  b.blast_strength = 2;
  b.fuse = 9;
  s.bombs.push_back(b);
  s = step(s, only(0, Action::Right));
  CHECK(s.agents[0].pos == Coord{5, 4});
  CHECK(s.bombs[0].pos == Coord{5, 5});
}

TEST_CASE("kick with no room behind the bomb is refused") {
  GameState s = blank_state();
  s.agents[0].pos = {5, 4};
  s.agents[0].can_kick = true;
  s.board[s.cell(5, 6)] = Tile::Rigid;
  Bomb b;
  b.pos = {5, 5};
  b.owner = 1;
  b.fuse = 9;
  s.bombs.push_back(b);
  s = step(s, only(0, Action::Right));
  CHECK(s.agents[0].pos == Coord{5, 4});
  CHECK(s.bombs[0].pos == Coord{5, 5});
}

TEST_CASE("power-up pickups apply and clear the tile") {
  GameState s = blank_state();
  s.agents[0].pos = {5, 4};
  s.board[s.cell(5, 5)] = Tile::ExtraBomb;
  s = step(s, only(0, Action::Right));
  CHECK(s.agents[0].ammo == 2);
  CHECK(s.board[s.cell(5, 5)] == Tile::Passage);

  s.board[s.cell(5, 6)] = Tile::IncrRange;
  s = step(s, only(0, Action::Right));
  CHECK(s.agents[0].blast_strength == 3);

  s.board[s.cell(5, 7)] = Tile::Kick;
  s = step(s, only(0, Action::Right));
  CHECK(s.agents[0].can_kick);
}

TEST_CASE("legal actions") {
  GameState s = blank_state();

  SUBCASE("corner with rigid neighbors") {
    s.board[s.cell(0, 1)] = Tile::Rigid;
    s.board[s.cell(1, 0)] = Tile::Rigid;
    auto legal = legal_actions(s, 0);
    REQUIRE(legal.size() == 2);
    CHECK(legal[0] == Action::Stop);
    CHECK(legal[1] == Action::PlaceBomb);

    s.agents[0].ammo = 0;
    legal = legal_actions(s, 0);
    REQUIRE(legal.size() == 1);
    CHECK(legal[0] == Action::Stop);
  }

  SUBCASE("open mid-board cell offers all six") {
    s.agents[0].pos = {5, 5};
    CHECK(legal_actions(s, 0).size() == 6);
  }

  SUBCASE("standing on an own bomb excludes another placement") {
    s.agents[0].pos = {5, 5};
    Bomb b;
    b.pos = {5, 5};
    b.owner = 0;
    b.fuse = 9;
    s.bombs.push_back(b);
    const auto legal = legal_actions(s, 0);
    for (const Action a : legal) CHECK(a != Action::PlaceBomb);
    CHECK(legal.size() == 5);
  }
}

TEST_CASE("outcome rules") {
  GameState s = blank_state();

  SUBCASE("ongoing with everyone alive") { CHECK(outcome(s).ongoing()); }

  SUBCASE("sole survivor wins, the dead lose") {
    s.agents[1].alive = s.agents[2].alive = s.agents[3].alive = false;
    const GameOutcome o = outcome(s);
    CHECK(o.status == GameOutcome::Status::Win);
    REQUIRE(o.winners.size() == 1);
    CHECK(o.winners[0] == 0);
    CHECK(o.per_agent[0] == Result::Win);
    for (int i = 1; i < 4; ++i) CHECK(o.per_agent[i] == Result::Loss);
  }

  SUBCASE("nobody alive is a tie where everyone lost") {
    for (auto& a : s.agents) a.alive = false;
    const GameOutcome o = outcome(s);
    CHECK(o.status == GameOutcome::Status::Tie);
    for (int i = 0; i < 4; ++i) CHECK(o.per_agent[i] == Result::Loss);
  }

  SUBCASE("timeout with three alive: ties for the living, loss for the dead") {
    s.agents[2].alive = false;
    s.tick = s.max_ticks;
    const GameOutcome o = outcome(s);
    CHECK(o.status == GameOutcome::Status::Tie);
    CHECK(o.per_agent[0] == Result::Tie);
    CHECK(o.per_agent[1] == Result::Tie);
    CHECK(o.per_agent[2] == Result::Loss);
    CHECK(o.per_agent[3] == Result::Tie);
  }

  SUBCASE("team elimination wins for both members, dead or not") {
    s.mode = GameMode::Team;
    for (int i = 0; i < 4; ++i) s.agents[i].team = static_cast<std::uint8_t>(i % 2);
    s.agents[1].alive = false;
    s.agents[3].alive = false;
    s.agents[2].alive = false;  // dead member of the winning team
    const GameOutcome o = outcome(s);
    CHECK(o.status == GameOutcome::Status::Win);
    REQUIRE(o.winners.size() == 2);
    CHECK(o.per_agent[0] == Result::Win);
    CHECK(o.per_agent[2] == Result::Win);
    CHECK(o.per_agent[1] == Result::Loss);
    CHECK(o.per_agent[3] == Result::Loss);
  }
}

TEST_CASE("conservation and bomb accounting over a random game") {
  const GameConfig cfg;
  GameState s = generate_board(77, cfg);
  Rng rng(123);
  const int rigid0 = [&] {
    int n = 0;
    for (int c = 0; c < s.cells(); ++c) n += s.board[c] == Tile::Rigid ? 1 : 0;
    return n;
  }();
  int wood_prev = cfg.num_wood;

  for (int t = 0; t < 300 && outcome(s).ongoing(); ++t) {
    std::array<Action, 4> acts;
    for (int i = 0; i < 4; ++i)
      acts[i] = static_cast<Action>(rng.next_int(kNumActions));

    // Bomb budget per agent before the step.
    std::array<int, 4> budget{};
    for (int i = 0; i < 4; ++i) budget[i] = s.agents[i].ammo;
    for (const auto& b : s.bombs) budget[b.owner] += 1;

    advance_in_place(s, acts);

    int rigid = 0, wood = 0;
    for (int c = 0; c < s.cells(); ++c) {
      rigid += s.board[c] == Tile::Rigid ? 1 : 0;
      wood += s.board[c] == Tile::Wood ? 1 : 0;
    }
    CHECK(rigid == rigid0);
    CHECK(wood <= wood_prev);
    wood_prev = wood;

    for (int i = 0; i < 4; ++i) {
      int have = s.agents[i].ammo;
      for (const auto& b : s.bombs) have += b.owner == i ? 1 : 0;
      // Conserved, except an ExtraBomb pickup adds exactly one.
      CHECK(have >= budget[i]);
      CHECK(have <= budget[i] + 1);
    }

    for (const auto& b : s.bombs) {
      CHECK(b.fuse >= 1);
      CHECK(b.fuse <= 10);
    }
  }
}

TEST_CASE("fuses strictly decrease for surviving bombs") {
  GameState s = blank_state();
  s.agents[0].pos = {5, 5};
  s = step(s, only(0, Action::PlaceBomb));
  int prev = s.bombs[0].fuse;
  for (int i = 0; i < 5; ++i) {
    s = step(s, only(0, Action::Stop));
    REQUIRE(s.bombs.size() == 1);
    CHECK(s.bombs[0].fuse == prev - 1);
    prev = s.bombs[0].fuse;
  }
}
