#include <doctest.h>

#include <algorithm>
#include <set>

#include "ludman/taxonomy.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ludman;

namespace {

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

TEST_CASE("distinct moves equal the enumerated signature set") {
  const std::pair<const char*, std::size_t> games[] = {{"TicTacToe", 2}, {"Hex", 1}, {"Amazons", 4}, {"Breakthrough", 6}};
  for (const auto& [name, count] : games) {
    CAPTURE(name);
    GameSpec spec = testing::corpus(name);
    auto traces = run_playouts(spec, 0, 100);
    auto distinct = collect_distinct(traces, spec);
    CHECK(distinct.size() == count);
    CHECK(oracle::keys_of(distinct) == oracle::enumerate_signatures(spec));
  }
}

TEST_CASE("mover enters signatures only when rules differ per player") {
  CHECK_FALSE(signature_includes_mover(testing::corpus("TicTacToe")));
  CHECK_FALSE(signature_includes_mover(testing::corpus("Hex")));
  CHECK(signature_includes_mover(testing::corpus("Amazons")));
  CHECK(signature_includes_mover(testing::corpus("Breakthrough")));
}

TEST_CASE("signature text and id") {
  GameSpec spec = testing::corpus("Amazons");
  GameState s = initial_state(spec);
  const Move m = legal_moves(spec, s).front();
  MoveSignature sig = move_signature(m, spec);
  CHECK(sig.mover == std::optional<int>(1));
  CHECK(sig.piece == std::optional<std::string>("Queen"));
  CHECK(to_string(sig) == "P1 Queen #" + std::to_string(m.origin) + " [Move, SetMoverAgain]");
  CHECK(signature_id(sig) == fnv1a_hex(to_string(sig)));
  CHECK(signature_id(sig).size() == 16);

  GameSpec ttt = testing::corpus("TicTacToe");
  const Move add = legal_moves(ttt, initial_state(ttt)).front();
  CHECK(to_string(move_signature(add, ttt)) == "- Disc #" + std::to_string(ttt.play) + " [Add]");
}

TEST_CASE("distinct moves do not depend on trace order and keep the earliest exemplar") {
  GameSpec spec = testing::corpus("Breakthrough");
  auto traces = run_playouts(spec, 0, 40);
  auto forward = collect_distinct(traces, spec);
  std::reverse(traces.begin(), traces.end());
  auto backward = collect_distinct(traces, spec);
  REQUIRE(forward.size() == backward.size());
  for (std::size_t i = 0; i < forward.size(); ++i) {
    CHECK(forward[i].signature == backward[i].signature);
    CHECK(forward[i].seed == backward[i].seed);
    CHECK(forward[i].index == backward[i].index);
  }
  CHECK(std::is_sorted(forward.begin(), forward.end(),
                       [](const DistinctMove& a, const DistinctMove& b) { return a.signature < b.signature; }));
  std::reverse(traces.begin(), traces.end());
  for (const auto& d : forward) {
    CHECK(move_signature(traces[d.seed].moves[d.index], spec) == d.signature);
    for (std::uint64_t seed = 0; seed <= d.seed; ++seed) {
      const auto& moves = traces[seed].moves;
      const std::size_t limit = seed == d.seed ? d.index : moves.size();
      for (std::size_t i = 0; i < limit; ++i) CHECK_FALSE(move_signature(moves[i], spec) == d.signature);
    }
    CHECK_FALSE(d.rule_text.empty());
    CHECK(d.id == signature_id(d.signature));
  }
}

TEST_CASE("similar legal moves share the signature") {
  GameSpec ttt = testing::corpus("TicTacToe");
  GameState s = initial_state(ttt);
  auto moves = legal_moves(ttt, s);
  CHECK(similar_legal_moves(s, moves[3], ttt) == moves);

  GameSpec bt = testing::corpus("Breakthrough");
  GameState b = initial_state(bt);
  b.contents[testing::site(bt, "B3")] = 1;
  b.contents[testing::site(bt, "F3")] = 1;
  auto all = legal_moves(bt, b);
  auto capture = std::find_if(all.begin(), all.end(), [](const Move& m) { return m.has_action(ActionType::Remove); });
  REQUIRE(capture != all.end());
  auto similar = similar_legal_moves(b, *capture, bt);
  CHECK(similar.size() == 4);  // A2, C2 onto B3; E2, G2 onto F3
  for (const auto& m : similar) CHECK(m.has_action(ActionType::Remove));
}

TEST_CASE("ending examples") {
  GameSpec spec = testing::corpus("TicTacToe");
  auto traces = run_playouts(spec, 0, 100);
  auto endings = collect_endings(traces, spec);
  REQUIRE(endings.size() == 3);
  std::set<std::pair<Outcome, std::vector<int>>> kinds;
  for (const auto& e : endings) {
    kinds.insert({e.outcome, e.players});
    const PlayoutTrace& t = traces[e.seed];
    CHECK(t.outcome.outcome == e.outcome);
    CHECK(t.moves.size() == e.moves);
    GameState end = replay(spec, t, t.moves.size());
    REQUIRE(end.terminal);
    CHECK(end.terminal->winning_sites == e.winning_sites);
    for (std::uint64_t seed = 0; seed < e.seed; ++seed) {
      const auto& o = traces[seed].outcome;
      CHECK_FALSE((o.outcome == e.outcome && o.players == e.players && o.end_rule == e.end_rule));
    }
    if (e.outcome == Outcome::Win) {
      CHECK(e.winning_sites.size() == 3);
      CHECK(eval_condition(e.end_rule == spec.end[0].id ? spec.end[0].condition : kNoLudeme, end, spec,
                           {t.moves.back().mover, t.moves.back().to}));
    } else {
      CHECK(e.end_rule == kNoLudeme);
      CHECK(e.winning_sites.empty());
    }
    CHECK_FALSE(e.text.empty());
  }
  CHECK(kinds.count({Outcome::Win, {1}}) == 1);
  CHECK(kinds.count({Outcome::Win, {2}}) == 1);
  CHECK(kinds.count({Outcome::Draw, {1, 2}}) == 1);
}

TEST_CASE("unexercised generators") {
  GameSpec spec = testing::corpus("Amazons");
  CHECK(unexercised_generators({}, spec) == spec.generator_ids());
  auto distinct = collect_distinct(run_playouts(spec, 0, 10), spec);
  CHECK(unexercised_generators(distinct, spec).empty());
  distinct.erase(std::remove_if(distinct.begin(), distinct.end(),
                                [](const DistinctMove& d) { return d.signature.piece == std::optional<std::string>("Dot"); }),
                 distinct.end());
  auto missing = unexercised_generators(distinct, spec);
  REQUIRE(missing.size() == 1);
  CHECK(spec.entry(missing[0]).descriptor == "move.Shoot");
}
