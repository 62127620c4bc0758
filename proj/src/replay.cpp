#include <fstream>
#include <sstream>

#include "pommer/replay.hpp"

namespace pommer {

namespace {

std::string vision_token(int vision) {
  return vision < 0 ? "full" : std::to_string(vision);
}

int parse_vision(const std::string& tok) {
  if (tok == "full") return kFullVision;
  try {
    const int v = std::stoi(tok);
    if (v < 0) throw ReplayError("negative vision in replay header");
    return v;
  } catch (const std::logic_error&) {
    throw ReplayError("bad vision token '" + tok + "'");
  }
}

Result parse_result(char ch) {
  switch (ch) {
    case 'W': return Result::Win;
    case 'T': return Result::Tie;
    case 'L': return Result::Loss;
    default: throw ReplayError(std::string("bad outcome letter '") + ch + "'");
  }
}

}  // namespace

void write_replay(std::ostream& out, const Replay& r) {
  out << "pommer-replay v1 " << r.game_seed << ' '
      << (r.mode == GameMode::FFA ? "ffa" : "team") << ' ' << vision_token(r.vision)
      << '\n';
  for (std::size_t t = 0; t < r.actions.size(); ++t) {
    out << t;
    for (int a : r.actions[t]) out << ' ' << a;
    out << '\n';
  }
  out << "outcome ";
  for (Result res : r.recorded) out << result_char(res);
  out << '\n';
}

void write_replay_file(const std::string& path, const Replay& r) {
  std::ofstream out(path);
  if (!out) throw ReplayError("cannot open replay file for writing: " + path);
  write_replay(out, r);
}

Replay parse_replay(std::istream& in) {
  Replay r;
  std::string line;
  if (!std::getline(in, line)) throw ReplayError("empty replay");
  {
    std::istringstream h(line);
    std::string magic, version, mode;
    if (!(h >> magic >> version >> r.game_seed >> mode)) throw ReplayError("bad header");
    if (magic != "pommer-replay" || version != "v1")
      throw ReplayError("unrecognized replay header: " + line);
    if (mode == "ffa") r.mode = GameMode::FFA;
    else if (mode == "team") r.mode = GameMode::Team;
    else throw ReplayError("bad mode token '" + mode + "'");
    std::string vis;
    if (!(h >> vis)) throw ReplayError("missing vision token");
    r.vision = parse_vision(vis);
  }

  bool saw_outcome = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "outcome") {
      std::string letters;
      if (!(ls >> letters) || letters.size() != kNumAgents)
        throw ReplayError("bad outcome line: " + line);
      for (int i = 0; i < kNumAgents; ++i) r.recorded[i] = parse_result(letters[i]);
      saw_outcome = true;
      break;
    }
    std::array<int, kNumAgents> acts{};
    int tick = 0;
    try {
      tick = std::stoi(first);
    } catch (const std::logic_error&) {
      throw ReplayError("bad tick line: " + line);
    }
    if (tick != static_cast<int>(r.actions.size()))
      throw ReplayError("non-contiguous tick " + std::to_string(tick));
    for (int i = 0; i < kNumAgents; ++i) {
      if (!(ls >> acts[i])) throw ReplayError("short action line: " + line);
      if (acts[i] < -1 || acts[i] >= kNumActions)
        throw ReplayError("action out of range on line: " + line);
    }
    r.actions.push_back(acts);
  }
  if (!saw_outcome) throw ReplayError("replay missing outcome line");
  return r;
}

Replay parse_replay_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ReplayError("cannot open replay file: " + path);
  return parse_replay(in);
}

ReplayCheck validate_replay(const Replay& r, GameConfig config) {
  ReplayCheck check;
  config.mode = r.mode;
  GameState s = generate_board(r.game_seed, config);
  for (const auto& recorded : r.actions) {
    if (!outcome(s).ongoing()) {
      check.message = "game ended before the recorded actions ran out";
      return check;
    }
    std::array<Action, kNumAgents> acts;
    for (int i = 0; i < kNumAgents; ++i)
      acts[i] = recorded[i] < 0 ? Action::Stop : static_cast<Action>(recorded[i]);
    advance_in_place(s, acts);
  }
  const GameOutcome out = outcome(s);
  check.final_tick = s.tick;
  if (out.ongoing()) {
    check.message = "replayed actions do not reach a terminal state";
    return check;
  }
  check.simulated = out.per_agent;
  for (int i = 0; i < kNumAgents; ++i) {
    if (out.per_agent[i] != r.recorded[i]) {
      check.message = "outcome mismatch for agent " + std::to_string(i);
      return check;
    }
  }
  check.ok = true;
  return check;
}

}  // namespace pommer
