// Move signatures, distinct-move discovery over playouts, and ending examples.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ludman/engine.hpp"

namespace ludman {

struct MoveSignature {
  std::optional<int> mover;          // only when players' piece rules differ
  std::optional<std::string> piece;  // base piece name; absent for moves without a main piece
  LudemeId origin = kNoLudeme;
  std::vector<ActionType> actions;

  friend bool operator==(const MoveSignature&, const MoveSignature&) = default;
  friend auto operator<=>(const MoveSignature&, const MoveSignature&) = default;
};

/// "P1 Queen #12 [Move, SetMoverAgain]"; "-" stands for an absent mover or piece.
std::string to_string(const MoveSignature& sig);

/// Stable 16 hex digit id (FNV-1a over to_string).
std::string signature_id(const MoveSignature& sig);

/// Whether signatures of this game carry the mover: true when player-owned
/// pieces carry their own move rules, or the play rule names a specific player.
bool signature_includes_mover(const GameSpec& spec);

MoveSignature move_signature(const Move& move, const GameSpec& spec);

struct DistinctMove {
  MoveSignature signature;
  std::string id;
  std::uint64_t seed = 0;   // playout of the first occurrence
  std::size_t index = 0;    // move index within that playout
  std::string rule_text;    // English for the origin ludeme
};

/// One entry per signature, exemplar at the lowest (seed, index), sorted by signature.
std::vector<DistinctMove> collect_distinct(const std::vector<PlayoutTrace>& traces, const GameSpec& spec);

/// Legal moves sharing the selected move's signature, in legal-move order.
std::vector<Move> similar_legal_moves(const GameState& state, const Move& selected, const GameSpec& spec);

struct EndingExample {
  Outcome outcome = Outcome::Draw;
  std::vector<int> players;
  LudemeId end_rule = kNoLudeme;
  std::string id;
  std::uint64_t seed = 0;      // playout whose final move is the exemplar
  std::size_t moves = 0;       // length of that playout
  std::string text;
  std::vector<SiteId> winning_sites;
};

/// One example per (outcome, players, end rule), exemplar from the lowest seed.
std::vector<EndingExample> collect_endings(const std::vector<PlayoutTrace>& traces, const GameSpec& spec);

/// `(move ...)` generators never seen in the distinct moves, in source order.
std::vector<LudemeId> unexercised_generators(const std::vector<DistinctMove>& moves, const GameSpec& spec);

}  // namespace ludman
