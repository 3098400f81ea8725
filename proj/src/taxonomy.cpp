#include "ludman/taxonomy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "ludman/english.hpp"
#include "ludman/registry.hpp"

namespace ludman {

std::string to_string(const MoveSignature& sig) {
  std::vector<std::string> types;
  for (ActionType t : sig.actions) types.emplace_back(to_string(t));
  return fmt::format("{} {} #{} [{}]", sig.mover ? fmt::format("P{}", *sig.mover) : "-", sig.piece.value_or("-"),
                     sig.origin, fmt::join(types, ", "));
}

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

bool names_player(const RawNode& node) {
  if (node.kind == NodeKind::Symbol && player_symbol_index(node.text) > 0) return true;
  return std::any_of(node.children.begin(), node.children.end(), names_player);
}

}  // namespace

std::string signature_id(const MoveSignature& sig) { return fmt::format("{:016x}", fnv1a(to_string(sig))); }

bool signature_includes_mover(const GameSpec& spec) {
  for (const PieceSpec& p : spec.pieces) {
    if (p.owner != kNeutral && p.rule) return true;
  }
  return spec.play != kNoLudeme && names_player(spec.node(spec.play));
}

MoveSignature move_signature(const Move& move, const GameSpec& spec) {
  MoveSignature sig;
  if (signature_includes_mover(spec)) sig.mover = move.mover;
  if (move.piece) sig.piece = spec.pieces.at(static_cast<std::size_t>(*move.piece)).base;
  sig.origin = move.origin;
  sig.actions = move.action_types();
  return sig;
}

std::vector<DistinctMove> collect_distinct(const std::vector<PlayoutTrace>& traces, const GameSpec& spec) {
  const bool with_mover = signature_includes_mover(spec);
  std::map<MoveSignature, std::pair<std::uint64_t, std::size_t>> first;
  for (const PlayoutTrace& trace : traces) {
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
      const Move& m = trace.moves[i];
      MoveSignature sig;
      if (with_mover) sig.mover = m.mover;
      if (m.piece) sig.piece = spec.pieces.at(static_cast<std::size_t>(*m.piece)).base;
      sig.origin = m.origin;
      sig.actions = m.action_types();
      auto key = std::make_pair(trace.seed, i);
      auto [it, inserted] = first.try_emplace(std::move(sig), key);
      if (!inserted && key < it->second) it->second = key;
    }
  }
  std::vector<DistinctMove> out;
  out.reserve(first.size());
  for (const auto& [sig, where] : first) {
    out.push_back({sig, signature_id(sig), where.first, where.second, rule_sentence(sig.origin, spec)});
  }
  return out;
}

std::vector<Move> similar_legal_moves(const GameState& state, const Move& selected, const GameSpec& spec) {
  const MoveSignature target = move_signature(selected, spec);
  std::vector<Move> out;
  for (Move& m : legal_moves(spec, state)) {
    if (move_signature(m, spec) == target) out.push_back(std::move(m));
  }
  return out;
}

std::vector<EndingExample> collect_endings(const std::vector<PlayoutTrace>& traces, const GameSpec& spec) {
  using Key = std::tuple<Outcome, std::vector<int>, LudemeId>;
  std::map<Key, const PlayoutTrace*> first;
  for (const PlayoutTrace& trace : traces) {
    Key key{trace.outcome.outcome, trace.outcome.players, trace.outcome.end_rule};
    auto [it, inserted] = first.try_emplace(key, &trace);
    if (!inserted && trace.seed < it->second->seed) it->second = &trace;
  }
  std::vector<EndingExample> out;
  for (const auto& [key, trace] : first) {
    const auto& [outcome, players, rule] = key;
    EndingExample ex;
    ex.outcome = outcome;
    ex.players = players;
    ex.end_rule = rule;
    std::vector<std::string> who;
    for (int p : players) who.push_back(fmt::format("P{}", p));
    ex.id = fmt::format("{:016x}", fnv1a(fmt::format("{} {} {}", to_string(outcome), fmt::join(who, ","), rule)));
    ex.seed = trace->seed;
    ex.moves = trace->moves.size();
    ex.text = ending_sentence(rule, spec);
    ex.winning_sites = trace->outcome.winning_sites;
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<LudemeId> unexercised_generators(const std::vector<DistinctMove>& moves, const GameSpec& spec) {
  std::set<LudemeId> seen;
  for (const DistinctMove& m : moves) seen.insert(m.signature.origin);
  std::vector<LudemeId> out;
  for (LudemeId id : spec.generator_ids()) {
    if (!seen.count(id)) out.push_back(id);
  }
  return out;
}

}  // namespace ludman
