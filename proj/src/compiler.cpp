#include "ludman/compiler.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <unordered_map>

namespace ludman {

std::string_view to_string(CompileErrorKind kind) {
  switch (kind) {
    case CompileErrorKind::UnknownLudeme: return "UnknownLudeme";
    case CompileErrorKind::ArityMismatch: return "ArityMismatch";
    case CompileErrorKind::BadArgumentKind: return "BadArgumentKind";
    case CompileErrorKind::UnsupportedLudeme: return "UnsupportedLudeme";
    case CompileErrorKind::UnsupportedShape: return "UnsupportedShape";
    case CompileErrorKind::InvalidValue: return "InvalidValue";
  }
  return "?";
}

CompileError::CompileError(CompileErrorKind kind, Span span, const std::string& message)
    : std::runtime_error(fmt::format("{}: {}", to_string(kind), message)), kind_(kind), span_(span) {}

namespace {

[[noreturn]] void fail(CompileErrorKind kind, const RawNode& at, const std::string& message) {
  throw CompileError(kind, at.span, message);
}

std::string describe(const RawNode& node) {
  switch (node.kind) {
    case NodeKind::Call: return fmt::format("({} ...)", node.text);
    case NodeKind::Collection: return "a {...} collection";
    case NodeKind::Number: return fmt::format("number {}", node.number);
    case NodeKind::Text: return fmt::format("string \"{}\"", node.text);
    case NodeKind::Symbol: return fmt::format("symbol {}", node.text);
  }
  return "?";
}

std::string expected_of(const Slot& slot) {
  switch (slot.kind) {
    case SlotKind::Int: return "an integer";
    case SlotKind::String: return "a string";
    case SlotKind::Symbol: return fmt::format("one of [{}]", fmt::join(slot.values, ", "));
    case SlotKind::Ludeme: return fmt::format("a ludeme of [{}]", fmt::join(slot.accepts, ", "));
  }
  return "?";
}

struct Resolution {
  const LudemeDescriptor* descriptor = nullptr;
  std::vector<std::pair<std::string, const RawNode*>> bindings;
};

// Matches calls against registry descriptors, resolving overloaded heads
// (`if`, `or`, `piece`) by the accepting slot and the argument shapes.
class Validator {
 public:
  explicit Validator(const Registry& reg) : reg_(reg) {}

  void validate_root(const RawNode& root) {
    Slot top;
    top.name = "game";
    top.kind = SlotKind::Ludeme;
    top.accepts = {"game"};
    check_element(root, top);
  }

  const std::unordered_map<const RawNode*, Resolution>& resolutions() const { return resolved_; }

 private:
  std::vector<const LudemeDescriptor*> candidates(const RawNode& call) const {
    auto cands = reg_.with_head(call.text);
    if (cands.empty()) {
      if (reg_.is_unsupported(call.text)) {
        fail(CompileErrorKind::UnsupportedLudeme, call, fmt::format("'{}' is not supported", call.text));
      }
      fail(CompileErrorKind::UnknownLudeme, call, fmt::format("unknown ludeme '{}'", call.text));
    }
    bool selects = std::any_of(cands.begin(), cands.end(), [](auto* d) { return !d->selector.empty(); });
    if (!selects) return cands;
    std::string sel;
    if (!call.children.empty() && call.children.front().kind == NodeKind::Symbol) sel = call.children.front().text;
    std::vector<const LudemeDescriptor*> out;
    for (auto* d : cands) {
      if (d->selector.empty() || d->selector == sel) out.push_back(d);
    }
    if (out.empty()) {
      std::string name = sel.empty() ? call.text : call.text + " " + sel;
      if (reg_.is_unsupported(name)) {
        fail(CompileErrorKind::UnsupportedLudeme, call, fmt::format("'{}' is not supported", name));
      }
      fail(CompileErrorKind::UnknownLudeme, call, fmt::format("unknown ludeme '{}'", name));
    }
    return out;
  }

  bool shallow_element(const RawNode& arg, const Slot& slot) const {
    switch (slot.kind) {
      case SlotKind::Int: return arg.kind == NodeKind::Number;
      case SlotKind::String: return arg.kind == NodeKind::Text;
      case SlotKind::Symbol: return arg.kind == NodeKind::Symbol && reg_.symbol_allowed(slot, arg.text);
      case SlotKind::Ludeme: {
        if (arg.kind != NodeKind::Call || !reg_.has_head(arg.text)) return false;
        std::string sel = (!arg.children.empty() && arg.children.front().kind == NodeKind::Symbol)
                              ? arg.children.front().text
                              : std::string();
        for (auto* d : reg_.with_head(arg.text)) {
          if (!d->selector.empty() && d->selector != sel) continue;
          if (reg_.slot_accepts(slot, *d)) return true;
        }
        return false;
      }
    }
    return false;
  }

  bool shallow(const RawNode& arg, const Slot& slot) const {
    if (arg.kind == NodeKind::Collection) {
      if (slot.collection == CollectionMode::Never) return false;
      return arg.children.empty() || shallow_element(arg.children.front(), slot);
    }
    if (slot.collection == CollectionMode::Always) return false;
    return shallow_element(arg, slot);
  }

  // Validates one argument against a slot; throws a positioned error on mismatch.
  void check_arg(const RawNode& arg, const Slot& slot, Resolution& into) {
    if (arg.kind == NodeKind::Collection) {
      if (slot.collection == CollectionMode::Never) {
        fail(CompileErrorKind::BadArgumentKind, arg,
             fmt::format("slot '{}' expects {}, got a collection", slot.name, expected_of(slot)));
      }
      for (const auto& item : arg.children) check_element(item, slot);
    } else {
      if (slot.collection == CollectionMode::Always) {
        fail(CompileErrorKind::BadArgumentKind, arg,
             fmt::format("slot '{}' expects a {{...}} collection, got {}", slot.name, describe(arg)));
      }
      check_element(arg, slot);
    }
    into.bindings.emplace_back(slot.name, &arg);
  }

  void check_element(const RawNode& arg, const Slot& slot) {
    auto mismatch = [&] {
      fail(CompileErrorKind::BadArgumentKind, arg,
           fmt::format("slot '{}' expects {}, got {}", slot.name, expected_of(slot), describe(arg)));
    };
    switch (slot.kind) {
      case SlotKind::Int:
        if (arg.kind != NodeKind::Number) mismatch();
        return;
      case SlotKind::String:
        if (arg.kind != NodeKind::Text) mismatch();
        return;
      case SlotKind::Symbol:
        if (arg.kind != NodeKind::Symbol || !reg_.symbol_allowed(slot, arg.text)) mismatch();
        return;
      case SlotKind::Ludeme:
        if (arg.kind != NodeKind::Call) mismatch();
        resolve(arg, &slot);
        return;
    }
  }

  const LudemeDescriptor& resolve(const RawNode& call, const Slot* slot) {
    auto cands = candidates(call);
    if (slot) {
      std::vector<const LudemeDescriptor*> accepted;
      for (auto* d : cands) {
        if (reg_.slot_accepts(*slot, *d)) accepted.push_back(d);
      }
      if (accepted.empty()) {
        fail(CompileErrorKind::BadArgumentKind, call,
             fmt::format("slot '{}' expects {}, got '{}'", slot->name, expected_of(*slot), cands.front()->display_name()));
      }
      cands = std::move(accepted);
    }
    std::optional<CompileError> first_error;
    for (auto* d : cands) {
      try {
        Resolution res = match(call, *d);
        resolved_[&call] = std::move(res);
        return *d;
      } catch (const CompileError& e) {
        if (!first_error) first_error = e;
      }
    }
    throw *first_error;
  }

  Resolution match(const RawNode& call, const LudemeDescriptor& d) {
    Resolution res;
    res.descriptor = &d;
    const auto& args = call.children;
    std::size_t i = d.selector.empty() ? 0 : 1;
    for (const Slot& slot : d.slots) {
      if (slot.repeat) {
        std::size_t count = 0;
        while (i < args.size() && shallow(args[i], slot)) {
          check_arg(args[i++], slot, res);
          ++count;
        }
        if (count == 0 && !slot.optional) {
          if (i < args.size()) check_arg(args[i], slot, res);
          fail(CompileErrorKind::ArityMismatch, call,
               fmt::format("'{}' expects at least one '{}' argument", d.display_name(), slot.name));
        }
        continue;
      }
      if (i < args.size() && shallow(args[i], slot)) {
        check_arg(args[i++], slot, res);
        continue;
      }
      if (slot.optional) continue;
      if (i < args.size()) {
        check_arg(args[i], slot, res);
        fail(CompileErrorKind::BadArgumentKind, args[i],
             fmt::format("slot '{}' of '{}' cannot take {}", slot.name, d.display_name(), describe(args[i])));
      }
      fail(CompileErrorKind::ArityMismatch, call,
           fmt::format("'{}' is missing required argument '{}'", d.display_name(), slot.name));
    }
    if (i < args.size()) {
      // Surface unknown or unsupported ludemes before complaining about arity.
      if (args[i].kind == NodeKind::Call) candidates(args[i]);
      fail(CompileErrorKind::ArityMismatch, args[i],
           fmt::format("unexpected argument {} for '{}'", describe(args[i]), d.display_name()));
    }
    return res;
  }

  const Registry& reg_;
  std::unordered_map<const RawNode*, Resolution> resolved_;
};

class SpecBuilder {
 public:
  SpecBuilder(GameSpec& spec, const std::unordered_map<const RawNode*, Resolution>& resolved)
      : spec_(spec), resolved_(resolved) {}

  void index(const RawNode& root) {
    add_entry(root, kNoLudeme);
    for (auto& e : spec_.table) {
      auto it = resolved_.find(e.node);
      if (it == resolved_.end()) continue;
      e.descriptor = it->second.descriptor->id;
      for (const auto& [slot, node] : it->second.bindings) {
        if (node->kind == NodeKind::Collection) {
          for (const auto& item : node->children) e.args.emplace_back(slot, ids_.at(&item));
        } else {
          e.args.emplace_back(slot, ids_.at(node));
        }
      }
    }
  }

  void build() {
    const LudemeEntry& game = spec_.entry(0);
    spec_.name = node(game.arg("name")).text;

    const LudemeEntry& players = spec_.entry(game.arg("players"));
    const RawNode& count = node(players.arg("count"));
    if (count.number < 1 || count.number > 16) {
      fail(CompileErrorKind::InvalidValue, count, "player count must be between 1 and 16");
    }
    spec_.players = static_cast<int>(count.number);

    const LudemeEntry& equipment = spec_.entry(game.arg("equipment"));
    bool have_board = false;
    for (LudemeId item : equipment.args_named("items")) {
      const std::string& kind = spec_.entry(item).descriptor;
      if (kind == "board") {
        if (have_board) fail(CompileErrorKind::InvalidValue, node(item), "only one board is supported");
        spec_.board = build_board(node(item));
        have_board = true;
      }
    }
    if (!have_board) fail(CompileErrorKind::ArityMismatch, node(game.arg("equipment")), "equipment declares no board");
    for (LudemeId item : equipment.args_named("items")) {
      const std::string& kind = spec_.entry(item).descriptor;
      if (kind == "piece") add_piece(item);
      if (kind == "regions") add_region(item);
    }

    const LudemeEntry& rules = spec_.entry(game.arg("rules"));
    if (LudemeId meta = rules.arg("meta"); meta != kNoLudeme) spec_.swap = true;
    if (LudemeId start = rules.arg("start"); start != kNoLudeme) {
      for (LudemeId place : spec_.entry(start).args_named("placements")) add_placement(place);
    }
    spec_.play = spec_.entry(rules.arg("play")).arg("rule");
    build_move(spec_.play);
    for (const auto& piece : spec_.pieces) {
      if (piece.rule && !spec_.move_rules.count(*piece.rule)) build_move(*piece.rule);
    }
    for (LudemeId rule : spec_.entry(rules.arg("end")).args_named("rules")) add_end_rule(rule);
  }

 private:
  void add_entry(const RawNode& n, LudemeId parent) {
    LudemeId id = static_cast<LudemeId>(spec_.table.size());
    spec_.table.push_back(LudemeEntry{&n, parent, {}, {}});
    ids_[&n] = id;
    for (const auto& child : n.children) add_entry(child, id);
  }

  const RawNode& node(LudemeId id) const { return spec_.node(id); }

  int player_of(const RawNode& sym) const {
    int p = player_symbol_index(sym.text);
    if (p < 1 || p > spec_.players) {
      fail(CompileErrorKind::InvalidValue, sym, fmt::format("{} is not a player of this {}-player game", sym.text, spec_.players));
    }
    return p;
  }

  PlayerRef player_ref(LudemeId id) const {
    const RawNode& sym = node(id);
    if (sym.text == "Mover") return {PlayerRefKind::Mover, 0};
    if (sym.text == "Next") return {PlayerRefKind::Next, 0};
    if (sym.text == "All") return {PlayerRefKind::All, 0};
    return {PlayerRefKind::Player, player_of(sym)};
  }

  void add_piece(LudemeId id) {
    const LudemeEntry& e = spec_.entry(id);
    const std::string& base = node(e.arg("name")).text;
    const RawNode& owner = node(e.arg("owner"));
    std::optional<LudemeId> rule;
    if (LudemeId r = e.arg("moves"); r != kNoLudeme) rule = r;
    auto push = [&](int p, bool each) {
      PieceSpec piece{base + std::to_string(p), base, p, each, id, rule};
      if (spec_.find_piece(piece.name)) {
        fail(CompileErrorKind::InvalidValue, node(id), fmt::format("piece '{}' is declared twice", piece.name));
      }
      spec_.pieces.push_back(std::move(piece));
    };
    if (owner.text == "Each") {
      for (int p = 1; p <= spec_.players; ++p) push(p, true);
    } else if (owner.text == "Neutral") {
      push(kNeutral, false);
    } else {
      push(player_of(owner), false);
    }
  }

  void add_region(LudemeId id) {
    const LudemeEntry& e = spec_.entry(id);
    RegionSpec region;
    region.id = id;
    const RawNode& owner = node(e.arg("owner"));
    region.owner = player_of(owner);
    LudemeId name = e.arg("name");
    region.name = name != kNoLudeme ? node(name).text : "Region" + owner.text;
    for (LudemeId part : e.args_named("sites")) {
      const std::string& side = node(spec_.entry(part).arg("side")).text;
      auto sites = spec_.board.side(side);
      if (sites.empty()) {
        fail(CompileErrorKind::InvalidValue, node(part), fmt::format("this board has no {} side", side));
      }
      region.parts.push_back(RegionPart{part, side, std::move(sites)});
    }
    spec_.regions.push_back(std::move(region));
  }

  void add_placement(LudemeId id) {
    const LudemeEntry& e = spec_.entry(id);
    const RawNode& piece_name = node(e.arg("piece"));
    auto piece = spec_.find_piece(piece_name.text);
    if (!piece) fail(CompileErrorKind::InvalidValue, piece_name, fmt::format("no piece named '{}'", piece_name.text));
    Placement placement{id, *piece, {}};
    for (LudemeId site_id : e.args_named("sites")) {
      const RawNode& label = node(site_id);
      auto site = spec_.board.find(label.text);
      if (!site) fail(CompileErrorKind::InvalidValue, label, fmt::format("no site labelled '{}' on this board", label.text));
      placement.sites.push_back(*site);
    }
    spec_.start.push_back(std::move(placement));
  }

  std::vector<SiteFilter> site_filters(LudemeId to_id) const {
    std::vector<SiteFilter> out;
    for (LudemeId s : spec_.entry(to_id).args_named("sites")) {
      out.push_back(spec_.entry(s).descriptor == "sites.Enemy" ? SiteFilter::Enemy : SiteFilter::Empty);
    }
    return out;
  }

  std::vector<std::string> direction_names(const LudemeEntry& e) const {
    std::vector<std::string> out;
    if (LudemeId d = e.arg("direction"); d != kNoLudeme) out.push_back(node(d).text);
    if (LudemeId ds = e.arg("directions"); ds != kNoLudeme) {
      for (LudemeId n : spec_.entry(ds).args_named("names")) out.push_back(node(n).text);
    }
    if (out.empty()) out.push_back("Adjacent");
    return out;
  }

  void build_move(LudemeId id) {
    const LudemeEntry& e = spec_.entry(id);
    MoveRule rule;
    rule.id = id;
    rule.move_again = e.arg("then") != kNoLudeme;
    const std::string& kind = e.descriptor;
    if (kind == "move.Add") {
      rule.body = AddRule{site_filters(e.arg("to"))};
    } else if (kind == "move.Step") {
      rule.body = StepRule{direction_names(e), site_filters(e.arg("to"))};
    } else if (kind == "move.Slide") {
      LudemeId to = e.arg("to");
      rule.body = SlideRule{direction_names(e), to == kNoLudeme ? std::vector{SiteFilter::Empty} : site_filters(to)};
    } else if (kind == "move.Shoot") {
      const RawNode& name = node(spec_.entry(e.arg("piece")).arg("name"));
      auto piece = spec_.find_piece(name.text);
      if (!piece) fail(CompileErrorKind::InvalidValue, name, fmt::format("no piece named '{}'", name.text));
      rule.body = ShootRule{*piece, direction_names(e)};
    } else if (kind == "forEach.Piece") {
      rule.body = ForEachPieceRule{};
    } else if (kind == "if.move") {
      IfMoveRule body{e.arg("condition"), e.arg("then"), std::nullopt};
      if (LudemeId other = e.arg("else"); other != kNoLudeme) body.else_rule = other;
      build_condition(body.condition);
      build_move(body.then_rule);
      if (body.else_rule) build_move(*body.else_rule);
      rule.body = body;
    } else if (kind == "or.move") {
      OrMoveRule body{e.args_named("options")};
      for (LudemeId option : body.options) build_move(option);
      rule.body = body;
    } else {
      fail(CompileErrorKind::UnsupportedLudeme, node(id), fmt::format("'{}' cannot be used as a move", kind));
    }
    spec_.move_rules[id] = std::move(rule);
  }

  void build_condition(LudemeId id) {
    const LudemeEntry& e = spec_.entry(id);
    Condition cond;
    cond.id = id;
    const std::string& kind = e.descriptor;
    if (kind == "is.Line") {
      const RawNode& len = node(e.arg("length"));
      if (len.number < 2) fail(CompileErrorKind::InvalidValue, len, "line length must be at least 2");
      cond.body = LineCondition{static_cast<int>(len.number)};
    } else if (kind == "is.Connected") {
      cond.body = ConnectedCondition{player_ref(e.arg("who"))};
    } else if (kind == "is.Even") {
      cond.body = EvenMoveCountCondition{};
    } else if (kind == "is.Reached") {
      cond.body = ReachedCondition{player_ref(e.arg("who"))};
    } else if (kind == "no.Moves") {
      cond.body = NoMovesCondition{player_ref(e.arg("who"))};
    } else if (kind == "and.condition" || kind == "or.condition") {
      auto items = e.args_named("options");
      for (LudemeId item : items) build_condition(item);
      if (kind == "and.condition") {
        cond.body = AllOfCondition{items};
      } else {
        cond.body = AnyOfCondition{items};
      }
    } else {
      fail(CompileErrorKind::UnsupportedLudeme, node(id), fmt::format("'{}' cannot be used as a condition", kind));
    }
    spec_.conditions[id] = std::move(cond);
  }

  void add_end_rule(LudemeId id) {
    const LudemeEntry& e = spec_.entry(id);
    EndRule rule;
    rule.id = id;
    rule.condition = e.arg("condition");
    build_condition(rule.condition);
    const LudemeEntry& result = spec_.entry(e.arg("result"));
    rule.result.id = e.arg("result");
    rule.result.who = player_ref(result.arg("who"));
    const std::string& outcome = node(result.arg("outcome")).text;
    rule.result.outcome = outcome == "Win" ? Outcome::Win : outcome == "Loss" ? Outcome::Loss : Outcome::Draw;
    spec_.end.push_back(rule);
  }

  GameSpec& spec_;
  const std::unordered_map<const RawNode*, Resolution>& resolved_;
  std::unordered_map<const RawNode*, LudemeId> ids_;
};

}  // namespace

BoardGraph build_board(const RawNode& board) {
  if (!board.is_call("board") || board.children.size() != 1 || board.children[0].kind != NodeKind::Call) {
    fail(CompileErrorKind::UnsupportedShape, board, "expected (board <shape>)");
  }
  const RawNode& shape = board.children[0];
  const auto& args = shape.children;
  auto dimension = [&](const RawNode& n) {
    if (n.kind != NodeKind::Number || n.number < 1 || n.number > 26) {
      fail(CompileErrorKind::InvalidValue, n, "board dimensions must be integers between 1 and 26");
    }
    return static_cast<int>(n.number);
  };
  if (shape.text == "square" && args.size() == 1) return BoardGraph::square(dimension(args[0]));
  if (shape.text == "rectangle" && args.size() == 2) return BoardGraph::rectangle(dimension(args[0]), dimension(args[1]));
  if (shape.text == "hex" && args.size() == 2 && args[0].is_symbol("Diamond")) {
    return BoardGraph::hex_diamond(dimension(args[1]));
  }
  fail(CompileErrorKind::UnsupportedShape, shape, fmt::format("unsupported board shape {}", print_canonical(shape)));
}

GameSpec compile(const RawNode& tree, const Registry& registry) {
  if (!tree.is_call("game")) {
    throw CompileError(CompileErrorKind::BadArgumentKind, tree.span, "top-level form must be (game ...)");
  }
  auto source = std::make_shared<const RawNode>(tree);
  Validator validator(registry);
  validator.validate_root(*source);

  GameSpec spec;
  spec.source = source;
  SpecBuilder builder(spec, validator.resolutions());
  builder.index(*source);
  builder.build();
  return spec;
}

GameSpec compile_text(std::string_view text, const Registry& registry) { return compile(parse(text), registry); }

}  // namespace ludman
