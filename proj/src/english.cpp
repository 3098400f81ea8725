#include "ludman/english.hpp"

#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "ludman/registry.hpp"

namespace ludman {

std::string join_list(const std::vector<std::string>& items) {
  if (items.empty()) return {};
  std::string out = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) {
    out += i + 1 == items.size() ? " and " : ", ";
    out += items[i];
  }
  return out;
}

std::string number_word(long long n) {
  static constexpr std::array<const char*, 13> words{"zero", "one", "two",   "three", "four",   "five",  "six",
                                                     "seven", "eight", "nine", "ten", "eleven", "twelve"};
  if (n >= 0 && n <= 12) return words[static_cast<std::size_t>(n)];
  return std::to_string(n);
}

std::string player_name(int player) { return "player " + number_word(player); }

std::string pluralise(std::string_view noun) {
  static const std::map<std::string, std::string, std::less<>> irregular{
      {"Cross", "Crosses"}, {"Box", "Boxes"}, {"Fox", "Foxes"}, {"Man", "Men"},
      {"Goose", "Geese"},   {"Mouse", "Mice"}, {"Checker", "Checkers"}};
  if (auto it = irregular.find(noun); it != irregular.end()) return it->second;
  std::string out(noun);
  if (out.empty()) return out;
  auto ends_with = [&](std::string_view tail) { return out.size() >= tail.size() && out.ends_with(tail); };
  if (ends_with("s") || ends_with("x") || ends_with("z") || ends_with("ch") || ends_with("sh")) return out + "es";
  return out + "s";
}

std::string normalise_whitespace(std::string_view text) {
  std::string out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::string collapsed;
    for (char c : line) {
      if (c == ' ' && !collapsed.empty() && collapsed.back() == ' ') continue;
      collapsed += c;
    }
    while (!collapsed.empty() && (collapsed.back() == ' ' || collapsed.back() == '\r' || collapsed.back() == '\t')) {
      collapsed.pop_back();
    }
    if (!first) out += '\n';
    out += collapsed;
    first = false;
  }
  while (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

namespace {

std::string capitalise(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string who_text(const std::string& symbol) {
  if (symbol == "Mover") return "the moving player";
  if (symbol == "Next") return "the next player";
  if (symbol == "All") return "all players";
  if (int p = player_symbol_index(symbol); p > 0) return player_name(p);
  return symbol;
}

std::string direction_word(const std::string& name) {
  static const std::map<std::string, std::string, std::less<>> words{
      {"Adjacent", "adjacent"}, {"Orthogonal", "orthogonal"}, {"Diagonal", "diagonal"},
      {"Forward", "forward"},   {"FL", "forward-left"},       {"FR", "forward-right"}};
  if (auto it = words.find(name); it != words.end()) return it->second;
  return name;
}

bool is_compound(const LudemeEntry& e) {
  return e.descriptor == "or.move" || e.descriptor == "or.condition" || e.descriptor == "and.condition";
}

class Translator {
 public:
  using Template = std::function<std::string(const Translator&, const LudemeEntry&, const TranslationContext&)>;

  explicit Translator(const GameSpec& spec) : spec_(spec) {}

  static const std::map<std::string, Template, std::less<>>& templates();

  std::string operator()(LudemeId id, const TranslationContext& ctx) const {
    const LudemeEntry& e = spec_.entry(id);
    const auto& table = templates();
    auto it = table.find(e.descriptor);
    if (it == table.end()) {
      throw TranslationError(fmt::format("no English template for ludeme '{}'",
                                         e.descriptor.empty() ? e.node->text : e.descriptor));
    }
    return it->second(*this, e, ctx);
  }

  const GameSpec& spec() const { return spec_; }
  const RawNode& node(LudemeId id) const { return spec_.node(id); }
  const std::string& text(const LudemeEntry& e, std::string_view slot) const { return node(e.arg(slot)).text; }
  bool has(const LudemeEntry& e, std::string_view slot) const { return e.arg(slot) != kNoLudeme; }

  std::string directions(const LudemeEntry& e) const {
    std::vector<std::string> names;
    if (has(e, "direction")) names.push_back(direction_word(text(e, "direction")));
    if (has(e, "directions")) {
      for (LudemeId n : spec_.entry(e.arg("directions")).args_named("names")) names.push_back(direction_word(node(n).text));
    }
    if (names.empty()) names.push_back("adjacent");
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? " or " : "") + names[i];
    return out;
  }

  std::string with_then(const LudemeEntry& e, std::string base, const TranslationContext& ctx) const {
    if (has(e, "then")) base += " " + (*this)(e.arg("then"), ctx);
    return base;
  }

  // Options of or/and; nested compounds are bracketed so the grouping stays readable.
  std::string options(const LudemeEntry& e, std::string_view joiner, const TranslationContext& ctx) const {
    auto items = e.args_named("options");
    bool nested = false;
    for (LudemeId item : items) nested = nested || is_compound(spec_.entry(item));
    std::string out = nested ? "either " : "";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += fmt::format(" {} ", joiner);
      std::string part = (*this)(items[i], ctx);
      out += nested && is_compound(spec_.entry(items[i])) ? "(" + part + ")" : part;
    }
    return out;
  }

  std::string shape(const LudemeEntry& e) const {
    if (e.descriptor == "square") {
      auto n = node(e.arg("size")).number;
      return fmt::format("{}x{} rectangle board with square tiling", n, n);
    }
    if (e.descriptor == "rectangle") {
      return fmt::format("{}x{} rectangle board with square tiling", node(e.arg("width")).number,
                         node(e.arg("height")).number);
    }
    auto n = node(e.arg("size")).number;
    return fmt::format("{}x{} diamond board with hexagonal tiling", n, n);
  }

 private:
  const GameSpec& spec_;
};

const std::map<std::string, Translator::Template, std::less<>>& Translator::templates() {
  using T = const Translator&;
  using E = const LudemeEntry&;
  using C = const TranslationContext&;
  static const std::map<std::string, Template, std::less<>> table{
      {"game", [](T t, E, C) { return translate_game(t.spec()); }},
      {"players", [](T t, E e, C) {
         auto n = t.node(e.arg("count")).number;
         return fmt::format("{} player{}", number_word(n), n == 1 ? "" : "s");
       }},
      {"equipment", [](T t, E e, C c) {
         std::vector<std::string> parts;
         for (LudemeId item : e.args_named("items")) parts.push_back(t(item, c));
         return join_list(parts);
       }},
      {"board", [](T t, E e, C c) { return "on a " + t(e.arg("shape"), c); }},
      {"square", [](T t, E e, C) { return t.shape(e); }},
      {"rectangle", [](T t, E e, C) { return t.shape(e); }},
      {"hex", [](T t, E e, C) { return t.shape(e); }},
      {"piece", [](T t, E e, C) { return pluralise(t.text(e, "name")); }},
      {"piece.ref", [](T t, E e, C) { return "the piece " + t.text(e, "name"); }},
      {"regions", [](T t, E e, C c) {
         const std::string& owner = t.text(e, "owner");
         std::string name = t.has(e, "name") ? t.text(e, "name") : "Region" + owner;
         std::vector<std::string> parts;
         for (LudemeId s : e.args_named("sites")) parts.push_back(fmt::format("{}: {} for {}", name, t(s, c), owner));
         std::string out;
         for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " and " : "") + parts[i];
         return out;
       }},
      {"sites.Empty", [](T, E, C) { return std::string("the set of empty cells"); }},
      {"sites.Enemy", [](T, E, C) { return std::string("the set of cells occupied by enemy pieces"); }},
      {"sites.Side", [](T t, E e, C) { return fmt::format("the {} side", t.text(e, "side")); }},
      {"rules", [](T t, E e, C c) {
         std::vector<std::string> parts;
         for (const auto& [slot, id] : e.args) parts.push_back(t(id, c));
         std::string out;
         for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
         return out;
       }},
      {"meta", [](T t, E e, C c) { return t(e.arg("rule"), c); }},
      {"swap", [](T, E, C) { return std::string("the second player may swap sides after the first move"); }},
      {"start", [](T t, E e, C c) {
         std::vector<std::string> parts;
         for (LudemeId p : e.args_named("placements")) parts.push_back(t(p, c));
         std::string out;
         for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
         return out;
       }},
      {"place", [](T t, E e, C) {
         const std::string& name = t.text(e, "piece");
         std::vector<std::string> sites;
         for (LudemeId s : e.args_named("sites")) sites.push_back(t.node(s).text);
         auto piece = t.spec().find_piece(name);
         std::string base = piece ? t.spec().pieces[static_cast<std::size_t>(*piece)].base : name;
         int owner = piece ? t.spec().pieces[static_cast<std::size_t>(*piece)].owner : kNeutral;
         std::string whose = owner == kNeutral ? "" : " for " + player_name(owner);
         return fmt::format("Place a {}{} on site{}: {}.", base, whose, sites.size() == 1 ? "" : "s", join_list(sites));
       }},
      {"play", [](T t, E e, C c) { return capitalise(t(e.arg("rule"), c)) + "."; }},
      {"end", [](T t, E e, C c) {
         std::vector<std::string> parts;
         for (LudemeId r : e.args_named("rules")) parts.push_back(t(r, c));
         std::string out;
         for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
         return out;
       }},
      {"if.end", [](T t, E e, C c) {
         return fmt::format("If {}, {}.", t(e.arg("condition"), c), t(e.arg("result"), c));
       }},
      {"if.move", [](T t, E e, C c) {
         std::string out = fmt::format("if {}, {}", t(e.arg("condition"), c), t(e.arg("then"), c));
         if (t.has(e, "else")) out += ", else " + t(e.arg("else"), c);
         return out;
       }},
      {"or.move", [](T t, E e, C c) { return t.options(e, "or", c); }},
      {"or.condition", [](T t, E e, C c) { return t.options(e, "or", c); }},
      {"and.condition", [](T t, E e, C c) { return t.options(e, "and", c); }},
      {"move.Add", [](T t, E e, C c) {
         return t.with_then(e, "add one of your pieces to " + t(e.arg("to"), c), c);
       }},
      {"move.Step", [](T t, E e, C c) {
         return t.with_then(e, fmt::format("step from the location of the piece in the {} direction to {}",
                                           t.directions(e), t(e.arg("to"), c)),
                            c);
       }},
      {"move.Slide", [](T t, E e, C c) {
         std::string through = t.has(e, "to") ? t(e.arg("to"), c) : "the set of empty cells";
         return t.with_then(
             e, fmt::format("slide from the location of the piece in the {} direction through {}", t.directions(e), through), c);
       }},
      {"move.Shoot", [](T t, E e, C c) {
         std::string out = "shoot " + t(e.arg("piece"), c);
         if (t.has(e, "direction") || t.has(e, "directions")) out += fmt::format(" in the {} direction", t.directions(e));
         return t.with_then(e, out, c);
       }},
      {"forEach.Piece", [](T, E, C) { return std::string("move one of your pieces"); }},
      {"to", [](T t, E e, C c) {
         std::vector<std::string> parts;
         for (LudemeId s : e.args_named("sites")) parts.push_back(t(s, c));
         std::string out;
         for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " or " : "") + parts[i];
         return out;
       }},
      {"then", [](T t, E e, C c) { return "then " + t(e.arg("effect"), c); }},
      {"moveAgain", [](T, E, C) { return std::string("move again"); }},
      {"directions", [](T t, E e, C) {
         std::vector<std::string> names;
         for (LudemeId n : e.args_named("names")) names.push_back(direction_word(t.node(n).text));
         std::string out;
         for (std::size_t i = 0; i < names.size(); ++i) out += (i ? " or " : "") + names[i];
         return out;
       }},
      {"is.Line", [](T t, E e, C c) {
         auto n = t.node(e.arg("length")).number;
         if (c.section == TextSection::Aim) {
           return fmt::format("a player places {} of their pieces in an adjacent direction line", n);
         }
         return fmt::format("the last piece placed is part of a line of {} pieces in an adjacent direction", n);
       }},
      {"is.Connected", [](T t, E e, C) {
         return fmt::format("the region(s) of {} are connected", who_text(t.text(e, "who")));
       }},
      {"is.Even", [](T t, E e, C c) { return t(e.arg("value"), c) + " is even"; }},
      {"is.Reached", [](T t, E e, C) {
         std::string who = who_text(t.text(e, "who"));
         return fmt::format("a piece of {} reaches the region(s) of {}", who, who);
       }},
      {"count.Moves", [](T, E, C) { return std::string("the number of moves"); }},
      {"no.Moves", [](T t, E e, C) { return who_text(t.text(e, "who")) + " cannot move"; }},
      {"result", [](T t, E e, C) {
         const std::string& who = t.text(e, "who");
         const std::string& outcome = t.text(e, "outcome");
         if (outcome == "Draw") return std::string("the game is a draw");
         bool plural = who == "All";
         std::string verb = outcome == "Win" ? (plural ? "win" : "wins") : (plural ? "lose" : "loses");
         return who_text(who) + " " + verb;
       }},
  };
  return table;
}

// Id of the `(piece ...)` declaration enclosing a ludeme, if any.
std::optional<LudemeId> enclosing_piece(LudemeId id, const GameSpec& spec) {
  for (LudemeId cur = id; cur != kNoLudeme; cur = spec.entry(cur).parent) {
    if (spec.entry(cur).descriptor == "piece") return cur;
  }
  return std::nullopt;
}

}  // namespace

bool has_template(std::string_view descriptor) { return Translator::templates().count(descriptor) > 0; }

std::string translate_node(LudemeId id, const TranslationContext& context, const GameSpec& spec) {
  return Translator(spec)(id, context);
}

std::string rule_sentence(LudemeId move_rule, const GameSpec& spec) {
  Translator t(spec);
  if (auto decl = enclosing_piece(move_rule, spec)) {
    std::string subject = pluralise(spec.node(spec.entry(*decl).arg("name")).text);
    return subject + " " + t(move_rule, {TextSection::PieceRules, subject}) + ".";
  }
  return capitalise(t(move_rule, {TextSection::Rules, std::nullopt})) + ".";
}

std::string ending_sentence(LudemeId end_rule, const GameSpec& spec) {
  if (end_rule == kNoLudeme) return "If the player to move cannot move and no end rule applies, the game is a draw.";
  return Translator(spec)(end_rule, {TextSection::Aim, std::nullopt});
}

std::vector<std::string> translate_lines(const GameSpec& spec) {
  Translator t(spec);
  std::vector<std::string> lines;
  constexpr std::string_view kRegionIndent = "    ";
  constexpr std::string_view kIndent = "     ";

  lines.push_back(fmt::format("The game \"{}\" is played by {} on a {}.", spec.name,
                              t(spec.table[0].arg("players"), {TextSection::Header, std::nullopt}),
                              [&] {
                                for (const auto& e : spec.table) {
                                  if (e.descriptor == "board") return t(e.arg("shape"), {TextSection::Header, std::nullopt});
                                }
                                return std::string("board");
                              }()));

  std::vector<LudemeId> regions;
  std::vector<LudemeId> declarations;
  for (std::size_t i = 0; i < spec.table.size(); ++i) {
    if (spec.table[i].descriptor == "regions") regions.push_back(static_cast<LudemeId>(i));
    if (spec.table[i].descriptor == "piece") declarations.push_back(static_cast<LudemeId>(i));
  }
  if (!regions.empty()) {
    lines.emplace_back("Regions:");
    for (LudemeId r : regions) lines.push_back(std::string(kRegionIndent) + t(r, {TextSection::Equipment, std::nullopt}));
  }

  // Pieces line: shared pieces first, then each player's own, then neutral ones.
  std::vector<std::string> shared;
  std::map<int, std::vector<std::string>> owned;
  std::vector<std::string> neutral;
  std::set<LudemeId> seen;
  for (const PieceSpec& p : spec.pieces) {
    if (p.each) {
      if (seen.insert(p.declaration).second) shared.push_back(pluralise(p.base));
    } else if (p.owner == kNeutral) {
      neutral.push_back(pluralise(p.base));
    } else {
      owned[p.owner].push_back(pluralise(p.base));
    }
  }
  std::vector<std::string> sentences;
  if (!shared.empty()) sentences.push_back(fmt::format("All players play with {}.", join_list(shared)));
  for (const auto& [player, names] : owned) {
    sentences.push_back(fmt::format("{} plays with {}.", capitalise(player_name(player)), join_list(names)));
  }
  if (!neutral.empty()) sentences.push_back(fmt::format("The following pieces are neutral: {}.", join_list(neutral)));
  if (!sentences.empty()) {
    std::string line;
    for (std::size_t i = 0; i < sentences.size(); ++i) line += (i ? " " : "") + sentences[i];
    lines.push_back(line);
  }

  std::vector<std::string> piece_rules;
  for (LudemeId d : declarations) {
    const LudemeEntry& e = spec.entry(d);
    if (LudemeId rule = e.arg("moves"); rule != kNoLudeme) piece_rules.push_back(std::string(kIndent) + rule_sentence(rule, spec));
  }
  if (!piece_rules.empty()) {
    lines.emplace_back("Rules for Pieces:");
    lines.insert(lines.end(), piece_rules.begin(), piece_rules.end());
  }

  lines.emplace_back("Players take turns moving.");

  if (!spec.start.empty()) {
    lines.emplace_back("Setup:");
    for (const Placement& p : spec.start) lines.push_back(std::string(kIndent) + t(p.id, {TextSection::Setup, std::nullopt}));
  }

  lines.emplace_back("Rules:");
  lines.push_back(std::string(kIndent) + capitalise(t(spec.play, {TextSection::Rules, std::nullopt})) + ".");

  lines.emplace_back("Aim:");
  for (const EndRule& r : spec.end) lines.push_back(std::string(kIndent) + ending_sentence(r.id, spec));
  return lines;
}

std::string translate_game(const GameSpec& spec) {
  std::string out;
  for (const auto& line : translate_lines(spec)) out += line + "\n";
  return out;
}

}  // namespace ludman
