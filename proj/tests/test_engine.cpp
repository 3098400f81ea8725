#include <doctest.h>

#include <random>
#include <set>

#include "ludman/engine.hpp"
#include "ludman/rng.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ludman;

namespace {

const Move* find_move(const std::vector<Move>& moves, std::optional<SiteId> from, SiteId to) {
  for (const auto& m : moves) {
    if (m.from == from && m.to == to) return &m;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("xorshift64* is deterministic and unbiased in range") {
  Xorshift64Star a(0);
  Xorshift64Star b(0);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Xorshift64Star c(1);
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 30000; ++i) ++counts[c.below(3)];
  for (int n : counts) CHECK(n > 9000);
  CHECK(c.below(1) == 0);
}

TEST_CASE("initial states") {
  GameSpec ttt = testing::corpus("TicTacToe");
  GameState s = initial_state(ttt);
  CHECK(s.occupied() == 0);
  CHECK(s.mover == 1);
  CHECK(s.move_count == 0);
  CHECK_FALSE(s.terminal);

  GameSpec amazons = testing::corpus("Amazons");
  GameState a = initial_state(amazons);
  for (const char* label : {"A4", "D1", "G1", "J4"}) CHECK(a.contents[testing::site(amazons, label)] == 0);
  for (const char* label : {"A7", "D10", "G10", "J7"}) CHECK(a.contents[testing::site(amazons, label)] == 1);
  CHECK(a.occupied() == 8);

  CHECK(initial_state(testing::corpus("Hex")).contents.size() == 121);
}

TEST_CASE("overlapping placements are rejected") {
  GameSpec spec = compile_text(R"((game "Clash" (players 2)
      (equipment { (board (square 3)) (piece "Disc" Each (move Step (to (sites Empty)))) })
      (rules (start { (place "Disc1" {"A1"}) (place "Disc2" {"A1"}) })
             (play (forEach Piece)) (end (if (is Line 3) (result Mover Win))))))");
  try {
    initial_state(spec);
    FAIL("expected PlacementConflict");
  } catch (const EngineError& e) {
    CHECK(e.kind() == EngineErrorKind::PlacementConflict);
  }
}

TEST_CASE("Tic-Tac-Toe add moves and application") {
  GameSpec spec = testing::corpus("TicTacToe");
  GameState s = initial_state(spec);
  auto moves = legal_moves(spec, s);
  REQUIRE(moves.size() == 9);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    CHECK(moves[i].to == static_cast<SiteId>(i));
    CHECK(moves[i].from == moves[i].to);
    CHECK(moves[i].origin == spec.play);
    CHECK(moves[i].action_types() == std::vector{ActionType::Add});
    CHECK(moves[i].main_action == std::optional<std::size_t>(0));
  }
  const Move centre = *find_move(moves, testing::site(spec, "B2"), testing::site(spec, "B2"));
  GameState next = apply_move(s, centre, spec);
  CHECK(next.contents[4] == 0);
  CHECK(next.mover == 2);
  CHECK(next.move_count == 1);
  CHECK(next.occupied() == 1);
  CHECK(legal_moves(spec, next).size() == 8);
  CHECK_THROWS_AS(apply_move(next, centre, spec), EngineError);
}

TEST_CASE("full Tic-Tac-Toe board without a line is a draw") {
  GameSpec spec = testing::corpus("TicTacToe");
  // X O X / X O O / O X X, filled so that the last move (A1) makes no line.
  const std::vector<int> owner{2, 1, 1, 1, 2, 2, 2, 1, 1};
  GameState s = testing::with_owners(spec, owner);
  s.contents[0] = -1;
  s.mover = 2;
  s.move_count = 8;
  auto moves = legal_moves(spec, s);
  REQUIRE(moves.size() == 1);
  GameState end = apply_move(s, moves[0], spec);
  REQUIRE(end.terminal);
  CHECK(end.terminal->outcome == Outcome::Draw);
  CHECK(end.terminal->end_rule == kNoLudeme);
  CHECK(end.terminal->players == std::vector<int>{1, 2});
  CHECK(legal_moves(spec, end).empty());
  CHECK(check_end(spec, end, moves[0]) == end.terminal);
}

TEST_CASE("a fresh line wins for the mover with the line as witness") {
  GameSpec spec = testing::corpus("TicTacToe");
  GameState s = testing::with_owners(spec, {1, 1, 0, 2, 2, 0, 0, 0, 0});
  auto moves = legal_moves(spec, s);
  GameState end = apply_move(s, *find_move(moves, 2, 2), spec);
  REQUIRE(end.terminal);
  CHECK(end.terminal->outcome == Outcome::Win);
  CHECK(end.terminal->players == std::vector<int>{1});
  CHECK(end.terminal->end_rule == spec.end[0].id);
  CHECK(end.terminal->winning_sites == std::vector<SiteId>{0, 1, 2});
  CHECK(eval_condition(spec.end[0].condition, end, spec, {1, 2}));
  CHECK(condition_witness(spec.end[0].condition, end, spec, {1, 2}) == std::vector<SiteId>{0, 1, 2});

  GameState mid = apply_move(s, *find_move(moves, 5, 5), spec);
  CHECK_FALSE(mid.terminal);
  CHECK_FALSE(check_end(spec, mid, *find_move(moves, 5, 5)));
}

TEST_CASE("line detection agrees with the eight-line scan") {
  GameSpec spec = testing::corpus("TicTacToe");
  const LudemeId line = spec.end[0].condition;
  std::mt19937_64 rng(2024);
  int disagreements = 0;
  int positives = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<int> owner(9);
    for (int& o : owner) o = static_cast<int>(rng() % 3);
    std::vector<int> occupied;
    for (int i = 0; i < 9; ++i) {
      if (owner[i]) occupied.push_back(i);
    }
    if (occupied.empty()) continue;
    const int last = occupied[rng() % occupied.size()];
    GameState s = testing::with_owners(spec, owner);
    const bool expected = oracle::line_oracle(owner, last);
    positives += expected;
    if (eval_condition(line, s, spec, {owner[last], last}) != expected) ++disagreements;
  }
  CHECK(disagreements == 0);
  CHECK(positives > 1000);
}

TEST_CASE("hex connectivity agrees with a breadth-first search") {
  GameSpec spec = testing::corpus("Hex");
  const LudemeId connected = spec.end[0].condition;
  std::mt19937_64 rng(99);
  int disagreements = 0;
  int positives = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> owner(121);
    const unsigned density = 30 + static_cast<unsigned>(rng() % 60);
    for (int& o : owner) o = rng() % 100 < density ? static_cast<int>(1 + rng() % 2) : 0;
    GameState s = testing::with_owners(spec, owner);
    for (int player : {1, 2}) {
      const bool expected = oracle::hex_connection_oracle(owner, 11, player);
      positives += expected;
      const bool got = eval_condition(connected, s, spec, {player, std::nullopt});
      if (got != expected) ++disagreements;
      if (got) {
        // The witness is a chain of the player's pieces touching both regions.
        auto path = condition_witness(connected, s, spec, {player, std::nullopt});
        for (SiteId p : path) CHECK(owner[p] == player);
      }
    }
  }
  CHECK(disagreements == 0);
  CHECK(positives > 100);
}

TEST_CASE("a full row joins the NE and SW sides") {
  GameSpec spec = testing::corpus("Hex");
  std::vector<int> owner(121, 0);
  for (int c = 0; c < 11; ++c) owner[5 * 11 + c] = 1;  // row 5 spans c = 0..10
  GameState s = testing::with_owners(spec, owner);
  CHECK(eval_condition(spec.end[0].condition, s, spec, {1, std::nullopt}));
  CHECK_FALSE(eval_condition(spec.end[0].condition, s, spec, {2, std::nullopt}));
  CHECK(condition_witness(spec.end[0].condition, s, spec, {1, std::nullopt}).size() == 11);
}

TEST_CASE("Amazons: slides first, the mover keeps the turn, then shoots") {
  GameSpec spec = testing::corpus("Amazons");
  GameState s = initial_state(spec);
  auto moves = legal_moves(spec, s);
  // Ray oracle: count empty squares reachable from each of P1's queens.
  std::size_t expected = 0;
  const int dirs[8][2] = {{0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}};
  for (std::size_t i = 0; i < s.contents.size(); ++i) {
    if (s.contents[i] != 0) continue;
    const int c0 = static_cast<int>(i % 10);
    const int r0 = static_cast<int>(i / 10);
    for (const auto& d : dirs) {
      for (int c = c0 + d[0], r = r0 + d[1]; c >= 0 && c < 10 && r >= 0 && r < 10 && s.contents[r * 10 + c] < 0;
           c += d[0], r += d[1]) {
        ++expected;
      }
    }
  }
  CHECK(moves.size() == expected);
  for (const auto& m : moves) {
    CHECK(m.piece == std::optional<int>(0));
    CHECK(m.action_types() == std::vector{ActionType::Move, ActionType::SetMoverAgain});
    CHECK(spec.entry(m.origin).descriptor == "move.Slide");
  }
  GameState after = apply_move(s, moves.front(), spec);
  CHECK(after.mover == 1);
  CHECK(after.move_count == 1);
  auto shots = legal_moves(spec, after);
  REQUIRE_FALSE(shots.empty());
  for (const auto& m : shots) {
    CHECK(m.action_types() == std::vector{ActionType::Add});
    CHECK(m.piece == std::optional<int>(2));
    CHECK(m.from == m.to);
  }
  GameState shot = apply_move(after, shots.front(), spec);
  CHECK(shot.mover == 2);
  CHECK(shot.contents[*shots.front().to] == 2);
}

TEST_CASE("Breakthrough capture removes then moves") {
  GameSpec spec = testing::corpus("Breakthrough");
  GameState s = initial_state(spec);
  const SiteId b3 = testing::site(spec, "B3");
  const SiteId a2 = testing::site(spec, "A2");
  s.contents[b3] = 1;  // an enemy pawn in reach
  auto moves = legal_moves(spec, s);
  const Move* capture = find_move(moves, a2, b3);
  REQUIRE(capture != nullptr);
  CHECK(capture->action_types() == std::vector{ActionType::Remove, ActionType::Move});
  CHECK(capture->main_action == std::optional<std::size_t>(1));
  CHECK(describe_move(spec, *capture) == "(Remove B3), (Move A2-B3)");
  const std::size_t before = s.occupied();
  GameState after = apply_move(s, *capture, spec);
  CHECK(after.contents[b3] == 0);
  CHECK(after.contents[a2] == -1);
  CHECK(after.occupied() == before - 1);
  // Straight ahead is blocked by the enemy pawn: no straight capture.
  CHECK(find_move(moves, testing::site(spec, "B2"), b3) == nullptr);
}

TEST_CASE("Breakthrough pawns step towards the opponent") {
  GameSpec spec = testing::corpus("Breakthrough");
  GameState s = initial_state(spec);
  auto moves = legal_moves(spec, s);
  // Row 2 pawns: 8 straight steps plus 14 diagonal ones.
  CHECK(moves.size() == 22);
  for (const auto& m : moves) CHECK(spec.board.site(*m.to).row == 2);
  s.mover = 2;
  for (const auto& m : legal_moves(spec, s)) CHECK(spec.board.site(*m.to).row == 5);
}

TEST_CASE("conditions: parity, reach and no moves") {
  GameSpec amazons = testing::corpus("Amazons");
  GameState s = initial_state(amazons);
  const LudemeId even = std::get<IfMoveRule>(amazons.move_rule(amazons.play).body).condition;
  CHECK(eval_condition(even, s, amazons, {1, std::nullopt}));
  s.move_count = 3;
  CHECK_FALSE(eval_condition(even, s, amazons, {1, std::nullopt}));

  GameSpec bt = testing::corpus("Breakthrough");
  GameState b = initial_state(bt);
  const LudemeId reached = bt.end[0].condition;
  const LudemeId no_moves = bt.end[1].condition;
  const SiteId a8 = testing::site(bt, "A8");
  CHECK(eval_condition(reached, b, bt, {2, a8}) == false);  // P2's own start row is not its goal
  b.contents[a8] = 0;
  CHECK(eval_condition(reached, b, bt, {1, a8}));
  CHECK_FALSE(eval_condition(no_moves, b, bt, {1, std::nullopt}));
  GameState lone = b;
  for (auto& c : lone.contents) c = c == 1 ? -1 : c;
  CHECK(eval_condition(no_moves, lone, bt, {1, std::nullopt}));
}

TEST_CASE("playouts are deterministic and bounded") {
  GameSpec spec = testing::corpus("TicTacToe");
  CHECK(random_playout(spec, 0) == random_playout(spec, 0));
  CHECK_FALSE(random_playout(spec, 0) == random_playout(spec, 1));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    PlayoutTrace t = random_playout(spec, seed);
    CHECK(t.moves.size() <= 9);
    CHECK(t.moves.size() >= 5);
  }
}

TEST_CASE("hex playouts always have exactly one winner") {
  GameSpec spec = testing::corpus("Hex");
  for (const auto& t : run_playouts(spec, 0, 50)) {
    CHECK(t.outcome.outcome == Outcome::Win);
    CHECK(t.outcome.players.size() == 1);
    CHECK_FALSE(t.outcome.winning_sites.empty());
  }
}

TEST_CASE("replay reproduces the outcome and pieces are conserved") {
  for (const char* name : {"TicTacToe", "Hex", "Amazons", "Breakthrough"}) {
    CAPTURE(name);
    GameSpec spec = testing::corpus(name);
    for (const auto& trace : run_playouts(spec, 10, 5)) {
      GameState s = initial_state(spec);
      for (const Move& m : trace.moves) {
        const std::size_t before = s.occupied();
        GameState next = apply_move(s, m, spec);
        long delta = 0;
        for (const Action& a : m.actions) {
          if (a.type == ActionType::Add) ++delta;
          if (a.type == ActionType::Remove) --delta;
        }
        CHECK(static_cast<long>(next.occupied()) == static_cast<long>(before) + delta);
        CHECK(next.move_count == s.move_count + 1);
        s = std::move(next);
      }
      REQUIRE(s.terminal);
      CHECK(*s.terminal == trace.outcome);
      CHECK(replay(spec, trace, trace.moves.size()) == s);
      if (trace.outcome.end_rule != kNoLudeme) {
        LudemeId cond = kNoLudeme;
        for (const auto& r : spec.end) {
          if (r.id == trace.outcome.end_rule) cond = r.condition;
        }
        CHECK(eval_condition(cond, s, spec, {trace.moves.back().mover, trace.moves.back().to}));
      }
    }
  }
}

TEST_CASE("Amazons traces alternate slides and shots") {
  GameSpec spec = testing::corpus("Amazons");
  for (const auto& trace : run_playouts(spec, 0, 20)) {
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
      auto types = trace.moves[i].action_types();
      if (i % 2 == 0) {
        CHECK(types.back() == ActionType::SetMoverAgain);
      } else {
        CHECK(types == std::vector{ActionType::Add});
        CHECK(spec.entry(trace.moves[i].origin).descriptor == "move.Shoot");
      }
    }
  }
}

TEST_CASE("batch results do not depend on the thread count") {
  GameSpec spec = testing::corpus("Breakthrough");
  auto one = run_playouts(spec, 5, 24, 1);
  auto many = run_playouts(spec, 5, 24, 4);
  CHECK(one == many);
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].seed == 5 + i);
}

TEST_CASE("endless games hit the playout cap") {
  GameSpec spec = testing::fixture("Wander.lud");
  try {
    random_playout(spec, 3);
    FAIL("expected PlayoutLimitExceeded");
  } catch (const EngineError& e) {
    CHECK(e.kind() == EngineErrorKind::PlayoutLimitExceeded);
  }
}
