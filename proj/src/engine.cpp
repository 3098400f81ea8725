#include "ludman/engine.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <fmt/format.h>
#include <set>
#include <thread>

#include "ludman/rng.hpp"
#include "union_find.hpp"

namespace ludman {

std::string_view to_string(ActionType type) {
  switch (type) {
    case ActionType::Add: return "Add";
    case ActionType::Remove: return "Remove";
    case ActionType::Move: return "Move";
    case ActionType::Score: return "Score";
    case ActionType::SetMoverAgain: return "SetMoverAgain";
  }
  return "?";
}

Action Action::add(int piece, SiteId site) {
  Action a;
  a.type = ActionType::Add;
  a.piece = piece;
  a.site = site;
  return a;
}

Action Action::remove(SiteId site) {
  Action a;
  a.type = ActionType::Remove;
  a.site = site;
  return a;
}

Action Action::move(SiteId from, SiteId to) {
  Action a;
  a.type = ActionType::Move;
  a.from = from;
  a.to = to;
  return a;
}

Action Action::score(int player, int value) {
  Action a;
  a.type = ActionType::Score;
  a.player = player;
  a.value = value;
  return a;
}

Action Action::set_mover_again() {
  Action a;
  a.type = ActionType::SetMoverAgain;
  return a;
}

std::vector<ActionType> Move::action_types() const {
  std::vector<ActionType> out;
  out.reserve(actions.size());
  for (const auto& a : actions) out.push_back(a.type);
  return out;
}

bool Move::has_action(ActionType type) const {
  return std::any_of(actions.begin(), actions.end(), [&](const Action& a) { return a.type == type; });
}

std::string describe_move(const GameSpec& spec, const Move& move) {
  std::vector<std::string> parts;
  auto label = [&](SiteId s) { return spec.board.site(s).label; };
  for (const auto& a : move.actions) {
    switch (a.type) {
      case ActionType::Add:
        parts.push_back(fmt::format("(Add {} {})", spec.pieces.at(static_cast<std::size_t>(a.piece)).name, label(a.site)));
        break;
      case ActionType::Remove: parts.push_back(fmt::format("(Remove {})", label(a.site))); break;
      case ActionType::Move: parts.push_back(fmt::format("(Move {}-{})", label(a.from), label(a.to))); break;
      case ActionType::Score: parts.push_back(fmt::format("(Score P{}={})", a.player, a.value)); break;
      case ActionType::SetMoverAgain: parts.push_back("(SetMoverAgain)"); break;
    }
  }
  return fmt::format("{}", fmt::join(parts, ", "));
}

std::size_t GameState::occupied() const {
  return static_cast<std::size_t>(std::count_if(contents.begin(), contents.end(), [](int p) { return p >= 0; }));
}

std::optional<int> GameState::owner_at(const GameSpec& spec, SiteId site) const {
  int p = contents.at(static_cast<std::size_t>(site));
  if (p < 0) return std::nullopt;
  return spec.pieces[static_cast<std::size_t>(p)].owner;
}

std::string_view to_string(EngineErrorKind kind) {
  switch (kind) {
    case EngineErrorKind::PlacementConflict: return "PlacementConflict";
    case EngineErrorKind::IllegalMove: return "IllegalMove";
    case EngineErrorKind::UnsupportedPlayRule: return "UnsupportedPlayRule";
    case EngineErrorKind::UnsupportedCondition: return "UnsupportedCondition";
    case EngineErrorKind::PlayoutLimitExceeded: return "PlayoutLimitExceeded";
  }
  return "?";
}

EngineError::EngineError(EngineErrorKind kind, const std::string& message)
    : std::runtime_error(fmt::format("{}: {}", to_string(kind), message)), kind_(kind) {}

namespace {

struct PieceContext {
  SiteId site;
  int piece;
};

struct Witness {
  bool holds = false;
  std::vector<SiteId> sites;
};

class Generator {
 public:
  Generator(const GameSpec& spec, const GameState& state) : spec_(spec), state_(state), player_(state.mover) {}

  std::vector<Move> run() {
    generate(spec_.play, std::nullopt);
    return std::move(out_);
  }

 private:
  bool is_enemy(SiteId site) const {
    auto owner = state_.owner_at(spec_, site);
    return owner && *owner != kNeutral && *owner != player_;
  }

  bool is_empty(SiteId site) const { return state_.contents[static_cast<std::size_t>(site)] < 0; }

  bool allows(const std::vector<SiteFilter>& filters, SiteFilter f) const {
    return std::find(filters.begin(), filters.end(), f) != filters.end();
  }

  std::vector<Direction> resolve_directions(const std::vector<std::string>& names) const {
    std::vector<Direction> out;
    auto push = [&](std::optional<Direction> d) {
      if (!d || std::find(out.begin(), out.end(), *d) != out.end()) return;
      auto supported = spec_.board.directions(DirectionClass::Adjacent);
      if (std::find(supported.begin(), supported.end(), *d) != supported.end()) out.push_back(*d);
    };
    for (const auto& name : names) {
      if (name == "Adjacent" || name == "Orthogonal" || name == "Diagonal") {
        auto cls = name == "Adjacent" ? DirectionClass::Adjacent
                   : name == "Orthogonal" ? DirectionClass::Orthogonal
                                          : DirectionClass::Diagonal;
        for (Direction d : spec_.board.directions(cls)) push(d);
      } else if (name == "Forward") {
        push(spec_.board.forward(player_));
      } else if (name == "FL") {
        push(spec_.board.forward_left(player_));
      } else if (name == "FR") {
        push(spec_.board.forward_right(player_));
      } else {
        push(direction_from_string(name));
      }
    }
    return out;
  }

  Move base_move(const MoveRule& rule, std::optional<int> piece) const {
    Move m;
    m.mover = player_;
    m.piece = piece;
    m.origin = rule.id;
    return m;
  }

  void emit(const MoveRule& rule, Move m) {
    if (rule.move_again) m.actions.push_back(Action::set_mover_again());
    out_.push_back(std::move(m));
  }

  // Pieces a rule acts on: the dispatching piece, or every piece of the mover on the board.
  std::vector<PieceContext> movers_pieces(std::optional<PieceContext> ctx) const {
    if (ctx) return {*ctx};
    std::vector<PieceContext> out;
    for (std::size_t s = 0; s < state_.contents.size(); ++s) {
      int p = state_.contents[s];
      if (p >= 0 && spec_.pieces[static_cast<std::size_t>(p)].owner == player_) out.push_back({static_cast<SiteId>(s), p});
    }
    return out;
  }

  void step_or_capture(const MoveRule& rule, const PieceContext& pc, SiteId target, const std::vector<SiteFilter>& to) {
    Move m = base_move(rule, pc.piece);
    m.from = pc.site;
    m.to = target;
    if (is_empty(target) && allows(to, SiteFilter::Empty)) {
      m.actions.push_back(Action::move(pc.site, target));
      m.main_action = 0;
    } else if (is_enemy(target) && allows(to, SiteFilter::Enemy)) {
      m.actions.push_back(Action::remove(target));
      m.actions.push_back(Action::move(pc.site, target));
      m.main_action = 1;
    } else {
      return;
    }
    emit(rule, std::move(m));
  }

  void generate(LudemeId id, std::optional<PieceContext> ctx) {
    const MoveRule& rule = spec_.move_rule(id);
    std::visit([&](const auto& body) { visit(rule, body, ctx); }, rule.body);
  }

  void visit(const MoveRule& rule, const AddRule& body, std::optional<PieceContext> ctx) {
    std::vector<int> pieces = ctx ? std::vector<int>{ctx->piece} : spec_.pieces_of(player_);
    for (std::size_t s = 0; s < state_.contents.size(); ++s) {
      auto site = static_cast<SiteId>(s);
      bool ok = (is_empty(site) && allows(body.to, SiteFilter::Empty)) || (is_enemy(site) && allows(body.to, SiteFilter::Enemy));
      if (!ok) continue;
      for (int piece : pieces) {
        Move m = base_move(rule, piece);
        if (!is_empty(site)) m.actions.push_back(Action::remove(site));
        m.actions.push_back(Action::add(piece, site));
        m.main_action = m.actions.size() - 1;
        m.from = site;
        m.to = site;
        emit(rule, std::move(m));
      }
    }
  }

  void visit(const MoveRule& rule, const StepRule& body, std::optional<PieceContext> ctx) {
    for (const auto& pc : movers_pieces(ctx)) {
      for (Direction d : resolve_directions(body.directions)) {
        if (auto target = spec_.board.neighbour(pc.site, d)) step_or_capture(rule, pc, *target, body.to);
      }
    }
  }

  void visit(const MoveRule& rule, const SlideRule& body, std::optional<PieceContext> ctx) {
    for (const auto& pc : movers_pieces(ctx)) {
      for (Direction d : resolve_directions(body.directions)) {
        auto cur = spec_.board.neighbour(pc.site, d);
        while (cur && is_empty(*cur)) {
          step_or_capture(rule, pc, *cur, body.to);
          cur = spec_.board.neighbour(*cur, d);
        }
        if (cur && is_enemy(*cur) && allows(body.to, SiteFilter::Enemy)) step_or_capture(rule, pc, *cur, body.to);
      }
    }
  }

  void visit(const MoveRule& rule, const ShootRule& body, std::optional<PieceContext>) {
    // The projectile leaves from wherever the previous move ended.
    if (!state_.last_to) return;
    const SiteId origin = *state_.last_to;
    for (Direction d : resolve_directions(body.directions)) {
      auto cur = spec_.board.neighbour(origin, d);
      while (cur && is_empty(*cur)) {
        Move m = base_move(rule, body.piece);
        m.actions.push_back(Action::add(body.piece, *cur));
        m.main_action = 0;
        m.from = *cur;
        m.to = *cur;
        emit(rule, std::move(m));
        cur = spec_.board.neighbour(*cur, d);
      }
    }
  }

  void visit(const MoveRule&, const ForEachPieceRule&, std::optional<PieceContext>) {
    for (std::size_t s = 0; s < state_.contents.size(); ++s) {
      int p = state_.contents[s];
      if (p < 0) continue;
      const PieceSpec& piece = spec_.pieces[static_cast<std::size_t>(p)];
      if (piece.owner != player_ || !piece.rule) continue;
      generate(*piece.rule, PieceContext{static_cast<SiteId>(s), p});
    }
  }

  void visit(const MoveRule&, const IfMoveRule& body, std::optional<PieceContext> ctx) {
    ConditionContext cc{player_, state_.last_to};
    if (eval_condition(body.condition, state_, spec_, cc)) {
      generate(body.then_rule, ctx);
    } else if (body.else_rule) {
      generate(*body.else_rule, ctx);
    }
  }

  void visit(const MoveRule&, const OrMoveRule& body, std::optional<PieceContext> ctx) {
    for (LudemeId option : body.options) generate(option, ctx);
  }

  const GameSpec& spec_;
  const GameState& state_;
  int player_;
  std::vector<Move> out_;
};

int resolve_player(const PlayerRef& ref, const GameSpec& spec, const ConditionContext& ctx) {
  switch (ref.kind) {
    case PlayerRefKind::Mover: return ctx.mover;
    case PlayerRefKind::Next: return spec.next_player(ctx.mover);
    case PlayerRefKind::Player: return ref.player;
    case PlayerRefKind::All: break;
  }
  throw EngineError(EngineErrorKind::UnsupportedCondition, "'All' does not name a single player");
}

Witness line_witness(int length, const GameState& state, const GameSpec& spec, const ConditionContext& ctx) {
  if (!ctx.last_to) return {};
  const SiteId origin = *ctx.last_to;
  auto owner = state.owner_at(spec, origin);
  if (!owner) return {};
  auto adjacent = spec.board.directions(DirectionClass::Adjacent);
  // Each axis is visited once: the first half of the adjacent directions plus their opposites.
  for (std::size_t i = 0; i < adjacent.size() / 2; ++i) {
    Direction d = adjacent[i];
    std::deque<SiteId> run{origin};
    for (Direction dir : {d, opposite(d)}) {
      auto cur = spec.board.neighbour(origin, dir);
      while (cur && state.owner_at(spec, *cur) == owner) {
        if (dir == d) {
          run.push_back(*cur);
        } else {
          run.push_front(*cur);
        }
        cur = spec.board.neighbour(*cur, dir);
      }
    }
    if (static_cast<int>(run.size()) >= length) {
      std::vector<SiteId> sites(run.begin(), run.end());
      std::sort(sites.begin(), sites.end());
      return {true, sites};
    }
  }
  return {};
}

Witness connected_witness(int player, const GameState& state, const GameSpec& spec) {
  auto parts = spec.region_parts(player);
  if (parts.size() < 2) return {};
  const std::size_t n = spec.board.size();
  auto mine = [&](SiteId s) { return state.owner_at(spec, s) == player; };

  detail::UnionFind sets(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto site = static_cast<SiteId>(s);
    if (!mine(site)) continue;
    for (SiteId nb : spec.board.neighbours(site, DirectionClass::Adjacent)) {
      if (mine(nb)) sets.unite(site, nb);
    }
  }
  std::set<int> common;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::set<int> roots;
    for (SiteId s : parts[i]->sites) {
      if (mine(s)) roots.insert(sets.find(s));
    }
    if (i == 0) {
      common = std::move(roots);
    } else {
      std::set<int> kept;
      std::set_intersection(common.begin(), common.end(), roots.begin(), roots.end(), std::inserter(kept, kept.end()));
      common = std::move(kept);
    }
    if (common.empty()) return {};
  }

  // Shortest chains of the player's pieces from the first region to each other region.
  std::set<SiteId> path;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::vector<SiteId> parent(n, -2);
    std::deque<SiteId> queue;
    for (SiteId s : parts[0]->sites) {
      if (mine(s) && parent[static_cast<std::size_t>(s)] == -2) {
        parent[static_cast<std::size_t>(s)] = -1;
        queue.push_back(s);
      }
    }
    const auto& goal = parts[i]->sites;
    while (!queue.empty()) {
      SiteId cur = queue.front();
      queue.pop_front();
      if (std::find(goal.begin(), goal.end(), cur) != goal.end()) {
        for (SiteId s = cur; s >= 0; s = parent[static_cast<std::size_t>(s)]) path.insert(s);
        break;
      }
      for (SiteId nb : spec.board.neighbours(cur, DirectionClass::Adjacent)) {
        if (mine(nb) && parent[static_cast<std::size_t>(nb)] == -2) {
          parent[static_cast<std::size_t>(nb)] = cur;
          queue.push_back(nb);
        }
      }
    }
  }
  return {true, std::vector<SiteId>(path.begin(), path.end())};
}

Witness evaluate(LudemeId id, const GameState& state, const GameSpec& spec, const ConditionContext& ctx);

struct ConditionVisitor {
  const GameState& state;
  const GameSpec& spec;
  const ConditionContext& ctx;

  Witness operator()(const LineCondition& c) const { return line_witness(c.length, state, spec, ctx); }

  Witness operator()(const ConnectedCondition& c) const {
    return connected_witness(resolve_player(c.who, spec, ctx), state, spec);
  }

  Witness operator()(const EvenMoveCountCondition&) const { return {state.move_count % 2 == 0, {}}; }

  Witness operator()(const ReachedCondition& c) const {
    if (!ctx.last_to) return {};
    int player = resolve_player(c.who, spec, ctx);
    if (state.owner_at(spec, *ctx.last_to) != player) return {};
    for (const RegionPart* part : spec.region_parts(player)) {
      if (std::find(part->sites.begin(), part->sites.end(), *ctx.last_to) != part->sites.end()) {
        return {true, {*ctx.last_to}};
      }
    }
    return {};
  }

  Witness operator()(const NoMovesCondition& c) const {
    GameState hypothetical = state;
    hypothetical.mover = resolve_player(c.who, spec, ctx);
    hypothetical.terminal.reset();
    return {legal_moves(spec, hypothetical).empty(), {}};
  }

  Witness operator()(const AllOfCondition& c) const {
    std::set<SiteId> sites;
    for (LudemeId item : c.items) {
      Witness w = evaluate(item, state, spec, ctx);
      if (!w.holds) return {};
      sites.insert(w.sites.begin(), w.sites.end());
    }
    return {true, std::vector<SiteId>(sites.begin(), sites.end())};
  }

  Witness operator()(const AnyOfCondition& c) const {
    for (LudemeId item : c.items) {
      Witness w = evaluate(item, state, spec, ctx);
      if (w.holds) return w;
    }
    return {};
  }
};

Witness evaluate(LudemeId id, const GameState& state, const GameSpec& spec, const ConditionContext& ctx) {
  auto it = spec.conditions.find(id);
  if (it == spec.conditions.end()) {
    throw EngineError(EngineErrorKind::UnsupportedCondition, fmt::format("ludeme {} is not a compiled condition", id));
  }
  return std::visit(ConditionVisitor{state, spec, ctx}, it->second.body);
}

std::vector<int> resolve_result_players(const PlayerRef& ref, const GameSpec& spec, const ConditionContext& ctx) {
  if (ref.kind == PlayerRefKind::All) {
    std::vector<int> all(static_cast<std::size_t>(spec.players));
    std::iota(all.begin(), all.end(), 1);
    return all;
  }
  return {resolve_player(ref, spec, ctx)};
}

std::vector<int> all_players(const GameSpec& spec) {
  std::vector<int> all(static_cast<std::size_t>(spec.players));
  std::iota(all.begin(), all.end(), 1);
  return all;
}

// Applies a move without checking legality. When `next_moves` is given it
// receives the legal moves of the resulting state (empty if terminal).
GameState advance(const GameState& state, const Move& move, const GameSpec& spec, std::vector<Move>* next_moves) {
  GameState next = state;
  bool again = false;
  for (const Action& a : move.actions) {
    switch (a.type) {
      case ActionType::Add: next.contents.at(static_cast<std::size_t>(a.site)) = a.piece; break;
      case ActionType::Remove: next.contents.at(static_cast<std::size_t>(a.site)) = -1; break;
      case ActionType::Move: {
        auto& from = next.contents.at(static_cast<std::size_t>(a.from));
        next.contents.at(static_cast<std::size_t>(a.to)) = from;
        from = -1;
        break;
      }
      case ActionType::Score: next.scores.at(static_cast<std::size_t>(a.player)) = a.value; break;
      case ActionType::SetMoverAgain: again = true; break;
    }
  }
  ++next.move_count;
  next.last_to = move.to;
  next.last_mover = move.mover;
  next.mover = again ? move.mover : spec.next_player(move.mover);

  ConditionContext ctx{move.mover, move.to};
  for (const EndRule& rule : spec.end) {
    Witness w = evaluate(rule.condition, next, spec, ctx);
    if (!w.holds) continue;
    next.terminal =
        EndMatch{rule.id, rule.result.outcome, resolve_result_players(rule.result.who, spec, ctx), move, w.sites};
    if (next_moves) next_moves->clear();
    return next;
  }
  std::vector<Move> moves = legal_moves(spec, next);
  if (moves.empty()) next.terminal = EndMatch{kNoLudeme, Outcome::Draw, all_players(spec), move, {}};
  if (next_moves) *next_moves = std::move(moves);
  return next;
}

}  // namespace

GameState initial_state(const GameSpec& spec) {
  GameState state;
  state.contents.assign(spec.board.size(), -1);
  state.scores.assign(static_cast<std::size_t>(spec.players) + 1, 0);
  for (const Placement& p : spec.start) {
    for (SiteId s : p.sites) {
      auto& cell = state.contents.at(static_cast<std::size_t>(s));
      if (cell >= 0) {
        throw EngineError(EngineErrorKind::PlacementConflict,
                          fmt::format("site {} receives more than one piece", spec.board.site(s).label));
      }
      cell = p.piece;
    }
  }
  if (legal_moves(spec, state).empty()) state.terminal = EndMatch{kNoLudeme, Outcome::Draw, all_players(spec), Move{}, {}};
  return state;
}

std::vector<Move> legal_moves(const GameSpec& spec, const GameState& state) {
  if (state.terminal) return {};
  if (!spec.move_rules.count(spec.play)) {
    throw EngineError(EngineErrorKind::UnsupportedPlayRule, "play rule was not compiled");
  }
  return Generator(spec, state).run();
}

GameState apply_move(const GameState& state, const Move& move, const GameSpec& spec) {
  if (state.terminal) throw EngineError(EngineErrorKind::IllegalMove, "the game is already over");
  auto moves = legal_moves(spec, state);
  if (std::find(moves.begin(), moves.end(), move) == moves.end()) {
    throw EngineError(EngineErrorKind::IllegalMove, fmt::format("{} is not legal here", describe_move(spec, move)));
  }
  return advance(state, move, spec, nullptr);
}

bool eval_condition(LudemeId condition, const GameState& state, const GameSpec& spec, const ConditionContext& context) {
  return evaluate(condition, state, spec, context).holds;
}

std::vector<SiteId> condition_witness(LudemeId condition, const GameState& state, const GameSpec& spec,
                                      const ConditionContext& context) {
  return evaluate(condition, state, spec, context).sites;
}

std::optional<EndMatch> check_end(const GameSpec& spec, const GameState& state, const Move& last) {
  ConditionContext ctx{last.mover, last.to};
  for (const EndRule& rule : spec.end) {
    Witness w = evaluate(rule.condition, state, spec, ctx);
    if (w.holds) return EndMatch{rule.id, rule.result.outcome, resolve_result_players(rule.result.who, spec, ctx), last, w.sites};
  }
  GameState open = state;
  open.terminal.reset();
  if (legal_moves(spec, open).empty()) return EndMatch{kNoLudeme, Outcome::Draw, all_players(spec), last, {}};
  return std::nullopt;
}

PlayoutTrace random_playout(const GameSpec& spec, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  PlayoutTrace trace;
  trace.seed = seed;
  GameState state = initial_state(spec);
  std::vector<Move> moves = legal_moves(spec, state);
  while (!state.terminal) {
    if (trace.moves.size() >= kPlayoutMoveCap) {
      throw EngineError(EngineErrorKind::PlayoutLimitExceeded,
                        fmt::format("playout with seed {} exceeded {} moves", seed, kPlayoutMoveCap));
    }
    const Move chosen = moves[static_cast<std::size_t>(rng.below(moves.size()))];
    state = advance(state, chosen, spec, &moves);
    trace.moves.push_back(chosen);
  }
  trace.outcome = *state.terminal;
  return trace;
}

std::vector<PlayoutTrace> run_playouts(const GameSpec& spec, std::uint64_t base_seed, std::size_t count,
                                       unsigned threads) {
  std::vector<PlayoutTrace> traces(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        traces[i] = random_playout(spec, base_seed + i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return traces;
}

GameState replay(const GameSpec& spec, const PlayoutTrace& trace, std::size_t moves) {
  GameState state = initial_state(spec);
  for (std::size_t i = 0; i < moves && i < trace.moves.size(); ++i) state = advance(state, trace.moves[i], spec, nullptr);
  return state;
}

}  // namespace ludman
