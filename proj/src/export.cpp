#include "ludman/export.hpp"

#include "ludman/english.hpp"

namespace ludman {

namespace {

ordered_json site_json(const GameSpec& spec, std::optional<SiteId> site) {
  if (!site) return nullptr;
  return spec.board.site(*site).label;
}

ordered_json sites_json(const GameSpec& spec, const std::vector<SiteId>& sites) {
  ordered_json out = ordered_json::array();
  for (SiteId s : sites) out.push_back(spec.board.site(s).label);
  return out;
}

ordered_json end_match_json(const EndMatch& end, const GameSpec& spec) {
  ordered_json j;
  j["outcome"] = std::string(to_string(end.outcome));
  j["players"] = end.players;
  j["end_rule"] = end.end_rule == kNoLudeme ? ordered_json(nullptr) : ordered_json(end.end_rule);
  j["winning_sites"] = sites_json(spec, end.winning_sites);
  return j;
}

}  // namespace

ordered_json move_to_json(const Move& move, const GameSpec& spec) {
  ordered_json j;
  j["mover"] = move.mover;
  j["piece"] = move.piece ? ordered_json(spec.pieces.at(static_cast<std::size_t>(*move.piece)).name) : ordered_json(nullptr);
  j["origin"] = move.origin;
  j["from"] = site_json(spec, move.from);
  j["to"] = site_json(spec, move.to);
  ordered_json actions = ordered_json::array();
  auto label = [&](SiteId s) { return spec.board.site(s).label; };
  for (const Action& a : move.actions) {
    ordered_json act = ordered_json::array({std::string(to_string(a.type))});
    switch (a.type) {
      case ActionType::Add:
        act.push_back(spec.pieces.at(static_cast<std::size_t>(a.piece)).name);
        act.push_back(label(a.site));
        break;
      case ActionType::Remove: act.push_back(label(a.site)); break;
      case ActionType::Move:
        act.push_back(label(a.from));
        act.push_back(label(a.to));
        break;
      case ActionType::Score:
        act.push_back(a.player);
        act.push_back(a.value);
        break;
      case ActionType::SetMoverAgain: break;
    }
    actions.push_back(std::move(act));
  }
  j["actions"] = std::move(actions);
  return j;
}

ordered_json trace_to_json(const PlayoutTrace& trace, const GameSpec& spec) {
  ordered_json j;
  j["game"] = spec.name;
  j["seed"] = trace.seed;
  ordered_json moves = ordered_json::array();
  for (const Move& m : trace.moves) moves.push_back(move_to_json(m, spec));
  j["moves"] = std::move(moves);
  j["outcome"] = end_match_json(trace.outcome, spec);
  return j;
}

ordered_json taxonomy_to_json(const GameSpec& spec, std::size_t playouts, std::uint64_t base_seed,
                              const std::vector<DistinctMove>& moves, const std::vector<EndingExample>& endings,
                              const std::vector<LudemeId>& unexercised) {
  ordered_json j;
  j["game"] = spec.name;
  j["playouts"] = playouts;
  j["base_seed"] = base_seed;
  j["mover_in_signature"] = signature_includes_mover(spec);
  ordered_json sigs = ordered_json::array();
  for (const DistinctMove& m : moves) {
    ordered_json s;
    s["id"] = m.id;
    s["mover"] = m.signature.mover ? ordered_json(*m.signature.mover) : ordered_json(nullptr);
    s["piece"] = m.signature.piece ? ordered_json(*m.signature.piece) : ordered_json(nullptr);
    s["origin"] = m.signature.origin;
    ordered_json types = ordered_json::array();
    for (ActionType t : m.signature.actions) types.push_back(std::string(to_string(t)));
    s["action_types"] = std::move(types);
    s["exemplar"] = {{"seed", m.seed}, {"index", m.index}};
    s["rule"] = m.rule_text;
    sigs.push_back(std::move(s));
  }
  j["signatures"] = std::move(sigs);
  ordered_json ends = ordered_json::array();
  for (const EndingExample& e : endings) {
    ordered_json x;
    x["id"] = e.id;
    x["outcome"] = std::string(to_string(e.outcome));
    x["players"] = e.players;
    x["end_rule"] = e.end_rule == kNoLudeme ? ordered_json(nullptr) : ordered_json(e.end_rule);
    x["exemplar"] = {{"seed", e.seed}, {"moves", e.moves}};
    x["text"] = e.text;
    x["winning_sites"] = sites_json(spec, e.winning_sites);
    ends.push_back(std::move(x));
  }
  j["endings"] = std::move(ends);
  ordered_json missing = ordered_json::array();
  for (LudemeId id : unexercised) missing.push_back({{"origin", id}, {"rule", rule_sentence(id, spec)}});
  j["coverage"] = {{"generators", spec.generator_ids().size()}, {"unexercised", std::move(missing)}};
  return j;
}

}  // namespace ludman
