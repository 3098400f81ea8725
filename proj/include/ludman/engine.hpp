// Interpreter for compiled games: states, move generation, end detection, playouts.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ludman/game_spec.hpp"

namespace ludman {

enum class ActionType { Add, Remove, Move, Score, SetMoverAgain };

/// Short type name as shown in action-type lists: Add, Remove, Move, Score, SetMoverAgain.
std::string_view to_string(ActionType type);

struct Action {
  ActionType type = ActionType::Add;
  int piece = -1;     // Add
  SiteId site = -1;   // Add, Remove
  SiteId from = -1;   // Move
  SiteId to = -1;     // Move
  int player = 0;     // Score
  int value = 0;      // Score

  static Action add(int piece, SiteId site);
  static Action remove(SiteId site);
  static Action move(SiteId from, SiteId to);
  static Action score(int player, int value);
  static Action set_mover_again();

  friend bool operator==(const Action&, const Action&) = default;
};

struct Move {
  int mover = 0;
  std::optional<int> piece;  // index into GameSpec::pieces; absent for pass-like moves
  LudemeId origin = kNoLudeme;
  std::vector<Action> actions;
  std::optional<SiteId> from;
  std::optional<SiteId> to;
  std::optional<std::size_t> main_action;  // index of the action involving the main piece

  std::vector<ActionType> action_types() const;
  bool has_action(ActionType type) const;

  friend bool operator==(const Move&, const Move&) = default;
};

/// "(Remove E6), (Move F5-E6)" style rendering of a move's actions.
std::string describe_move(const GameSpec& spec, const Move& move);

struct EndMatch {
  LudemeId end_rule = kNoLudeme;  // kNoLudeme: no legal moves and no rule fired
  Outcome outcome = Outcome::Draw;
  std::vector<int> players;
  Move final_move;
  std::vector<SiteId> winning_sites;

  friend bool operator==(const EndMatch&, const EndMatch&) = default;
};

struct GameState {
  std::vector<int> contents;  // piece index per site, -1 when empty
  int mover = 1;
  int move_count = 0;
  std::vector<int> scores;  // indexed by player, slot 0 unused
  std::optional<EndMatch> terminal;
  std::optional<SiteId> last_to;  // destination of the previous move
  int last_mover = 0;

  std::size_t occupied() const;
  /// Owner of the piece on a site, or nullopt when empty.
  std::optional<int> owner_at(const GameSpec& spec, SiteId site) const;

  friend bool operator==(const GameState&, const GameState&) = default;
};

/// Whose perspective a condition is evaluated from.
struct ConditionContext {
  int mover = 1;
  std::optional<SiteId> last_to;
};

enum class EngineErrorKind { PlacementConflict, IllegalMove, UnsupportedPlayRule, UnsupportedCondition, PlayoutLimitExceeded };

std::string_view to_string(EngineErrorKind kind);

class EngineError : public std::runtime_error {
 public:
  EngineError(EngineErrorKind kind, const std::string& message);
  EngineErrorKind kind() const { return kind_; }

 private:
  EngineErrorKind kind_;
};

inline constexpr std::size_t kPlayoutMoveCap = 10000;

GameState initial_state(const GameSpec& spec);

/// Legal moves for the player to move, ordered by origin site, then direction, then distance.
std::vector<Move> legal_moves(const GameSpec& spec, const GameState& state);

/// Applies a legal move. Throws EngineError(IllegalMove) otherwise.
GameState apply_move(const GameState& state, const Move& move, const GameSpec& spec);

bool eval_condition(LudemeId condition, const GameState& state, const GameSpec& spec, const ConditionContext& context);

/// Sites that witness a true condition (line, connection, reached site); empty when false.
std::vector<SiteId> condition_witness(LudemeId condition, const GameState& state, const GameSpec& spec,
                                      const ConditionContext& context);

/// First end rule (in declaration order) that holds after `last` was played;
/// otherwise a Draw when the player to move has no legal moves.
std::optional<EndMatch> check_end(const GameSpec& spec, const GameState& state, const Move& last);

struct PlayoutTrace {
  std::uint64_t seed = 0;
  std::vector<Move> moves;
  EndMatch outcome;

  friend bool operator==(const PlayoutTrace&, const PlayoutTrace&) = default;
};

/// Plays uniformly random legal moves until the game ends.
/// Throws EngineError(PlayoutLimitExceeded) after kPlayoutMoveCap moves.
PlayoutTrace random_playout(const GameSpec& spec, std::uint64_t seed);

/// Playout i uses seed base_seed + i. Results are in index order whatever the thread count.
std::vector<PlayoutTrace> run_playouts(const GameSpec& spec, std::uint64_t base_seed, std::size_t count,
                                       unsigned threads = 1);

/// State after the first `moves` moves of a trace (0 gives the initial state).
GameState replay(const GameSpec& spec, const PlayoutTrace& trace, std::size_t moves);

}  // namespace ludman
