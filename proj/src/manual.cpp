#include "ludman/manual.hpp"

#include <set>

#include <fmt/format.h>

#include "ludman/english.hpp"
#include "ludman/export.hpp"
#include "ludman/svg.hpp"

namespace ludman {

std::string outcome_text(Outcome outcome, const std::vector<int>& players) {
  if (outcome == Outcome::Draw) return "Draw";
  std::vector<std::string> names;
  for (int p : players) names.push_back(number_word(p));
  const bool one = players.size() == 1;
  return fmt::format("Player{} {} {}", one ? "" : "s", join_list(names),
                     outcome == Outcome::Win ? (one ? "wins" : "win") : (one ? "loses" : "lose"));
}

namespace {

constexpr const char* kStyle = R"(
body { font-family: sans-serif; max-width: 60em; margin: 2em auto; color: #222; }
pre.rules { white-space: pre-wrap; background: #f6f3ec; padding: 1em; }
figure.pair { display: flex; gap: 1em; margin: 0.5em 0 1.5em 0; }
figure.pair img { max-width: 45%; border: 1px solid #ccc; }
ul.level { list-style: none; padding-left: 1.5em; }
ul.level.single { padding-left: 0; }
span.label { font-weight: bold; }
p.placeholder { font-style: italic; }
)";

std::string mover_label(const std::optional<int>& mover) {
  return mover ? "Player " + number_word(*mover) : "Any player";
}

std::string types_label(const std::vector<ActionType>& types) {
  std::vector<std::string> names;
  for (ActionType t : types) names.emplace_back(to_string(t));
  return fmt::format("[{}]", fmt::join(names, ", "));
}

struct RuleGroup {
  LudemeId origin;
  std::string text;
  std::vector<const MoveEntry*> leaves;
};
struct PieceGroup {
  std::optional<std::string> piece;
  std::vector<RuleGroup> rules;
};
struct MoverGroup {
  std::optional<int> mover;
  std::vector<PieceGroup> pieces;
};

std::vector<MoverGroup> hierarchy(const std::vector<MoveEntry>& moves) {
  std::vector<MoverGroup> out;
  for (const MoveEntry& m : moves) {
    const MoveSignature& s = m.move.signature;
    if (out.empty() || out.back().mover != s.mover) out.push_back({s.mover, {}});
    auto& pieces = out.back().pieces;
    if (pieces.empty() || pieces.back().piece != s.piece) pieces.push_back({s.piece, {}});
    auto& rules = pieces.back().rules;
    if (rules.empty() || rules.back().origin != s.origin) rules.push_back({s.origin, m.move.rule_text, {}});
    rules.back().leaves.push_back(&m);
  }
  return out;
}

std::string ul(std::string_view level, std::size_t children) {
  return fmt::format(R"(<ul class="level {}{}">)", level, children == 1 ? " single" : "");
}

std::string pair_html(const std::string& before, const std::string& after, const std::string& what) {
  return fmt::format(R"(<figure class="pair"><img src="{}" alt="{} before"/><img src="{}" alt="{} after"/></figure>)",
                     escape_xml(before), escape_xml(what), escape_xml(after), escape_xml(what));
}

}  // namespace

ManualDocument build_manual(const GameSpec& spec, const ManualInputs& in, const std::vector<Asset>& assets) {
  std::set<std::string> known;
  for (const Asset& a : assets) known.insert(a.path);
  auto require = [&](const std::string& path) {
    if (!known.count(path)) throw MissingAsset(fmt::format("manual references missing asset '{}'", path));
  };
  require(in.setup_image);
  for (const auto& e : in.endings) {
    require(e.before);
    require(e.after);
  }
  for (const auto& m : in.moves) {
    require(m.before);
    require(m.after);
  }

  const auto groups = hierarchy(in.moves);
  const std::vector<std::string> strategy = in.strategy.value_or(std::vector<std::string>{});

  std::string h;
  h += "<!DOCTYPE html>\n";
  h += "<html xmlns=\"http://www.w3.org/1999/xhtml\" lang=\"en\">\n<head>\n<meta charset=\"utf-8\"/>\n";
  h += fmt::format("<title>{} manual</title>\n<style>{}</style>\n</head>\n<body>\n", escape_xml(spec.name), kStyle);
  h += fmt::format("<h1>{}</h1>\n", escape_xml(spec.name));

  h += "<section id=\"rules\">\n<h2>Rules</h2>\n<pre class=\"rules\">";
  for (const auto& line : in.translation) h += escape_xml(line) + "\n";
  h += "</pre>\n</section>\n";

  h += "<section id=\"heuristics\">\n<h2>Heuristics</h2>\n";
  if (!in.strategy || in.strategy->empty()) {
    h += fmt::format("<p class=\"placeholder\">{}</p>\n", kNoStrategy);
  } else {
    h += "<ul class=\"strategy\">\n";
    for (const auto& line : *in.strategy) h += fmt::format("<li>{}</li>\n", escape_xml(line));
    h += "</ul>\n";
  }
  h += "</section>\n";

  h += fmt::format("<section id=\"setup\">\n<h2>Setup</h2>\n<img src=\"{}\" alt=\"Initial position\"/>\n</section>\n",
                   escape_xml(in.setup_image));

  h += "<section id=\"endings\">\n<h2>Endings</h2>\n";
  for (const auto& e : in.endings) {
    h += fmt::format("<div class=\"ending\" id=\"ending-{}\">\n<p><span class=\"label\">{}.</span> {}</p>\n", e.example.id,
                     escape_xml(outcome_text(e.example.outcome, e.example.players)), escape_xml(e.example.text));
    h += pair_html(e.before, e.after, "Ending") + "\n</div>\n";
  }
  h += "</section>\n";

  h += "<section id=\"moves\">\n<h2>Moves</h2>\n";
  h += ul("mover", groups.size()) + "\n";
  for (const auto& mg : groups) {
    h += fmt::format("<li class=\"group\"><span class=\"label\">{}</span>\n", escape_xml(mover_label(mg.mover)));
    h += ul("piece", mg.pieces.size()) + "\n";
    for (const auto& pg : mg.pieces) {
      h += fmt::format("<li class=\"group\"><span class=\"label\">{}</span>\n", escape_xml(pg.piece.value_or("No piece")));
      h += ul("rule", pg.rules.size()) + "\n";
      for (const auto& rg : pg.rules) {
        h += fmt::format("<li class=\"group\"><span class=\"label\">{}</span>\n", escape_xml(rg.text));
        h += ul("actions", rg.leaves.size()) + "\n";
        for (const MoveEntry* leaf : rg.leaves) {
          h += fmt::format("<li class=\"leaf\" id=\"move-{}\"><span class=\"label\">{}</span>\n", leaf->move.id,
                           escape_xml(types_label(leaf->move.signature.actions)));
          h += pair_html(leaf->before, leaf->after, "Move") + "\n</li>\n";
        }
        h += "</ul>\n</li>\n";
      }
      h += "</ul>\n</li>\n";
    }
    h += "</ul>\n</li>\n";
  }
  h += "</ul>\n";
  if (!in.unexercised.empty()) {
    h += "<p class=\"coverage\">Rules never used in the sample games:</p>\n<ul class=\"coverage\">\n";
    for (LudemeId id : in.unexercised) h += fmt::format("<li>{}</li>\n", escape_xml(rule_sentence(id, spec)));
    h += "</ul>\n";
  }
  h += "</section>\n</body>\n</html>\n";

  ordered_json j;
  j["game"] = spec.name;
  ordered_json sections = ordered_json::array();
  sections.push_back({{"title", kSectionTitles[0]}, {"lines", in.translation}});
  sections.push_back({{"title", kSectionTitles[1]},
                      {"lines", in.strategy && !in.strategy->empty() ? strategy : std::vector<std::string>{kNoStrategy}},
                      {"placeholder", !in.strategy || in.strategy->empty()}});
  sections.push_back({{"title", kSectionTitles[2]}, {"image", in.setup_image}});
  ordered_json endings = ordered_json::array();
  for (const auto& e : in.endings) {
    ordered_json x;
    x["id"] = e.example.id;
    x["result"] = outcome_text(e.example.outcome, e.example.players);
    x["text"] = e.example.text;
    x["before"] = e.before;
    x["after"] = e.after;
    endings.push_back(std::move(x));
  }
  sections.push_back({{"title", kSectionTitles[3]}, {"items", std::move(endings)}});
  ordered_json movers = ordered_json::array();
  std::size_t leaf_count = 0;
  for (const auto& mg : groups) {
    ordered_json pieces = ordered_json::array();
    for (const auto& pg : mg.pieces) {
      ordered_json rules = ordered_json::array();
      for (const auto& rg : pg.rules) {
        ordered_json leaves = ordered_json::array();
        for (const MoveEntry* leaf : rg.leaves) {
          ordered_json types = ordered_json::array();
          for (ActionType t : leaf->move.signature.actions) types.push_back(std::string(to_string(t)));
          leaves.push_back({{"id", leaf->move.id},
                            {"action_types", std::move(types)},
                            {"exemplar", {{"seed", leaf->move.seed}, {"index", leaf->move.index}}},
                            {"before", leaf->before},
                            {"after", leaf->after}});
          ++leaf_count;
        }
        rules.push_back({{"origin", rg.origin}, {"text", rg.text}, {"leaves", std::move(leaves)}});
      }
      pieces.push_back({{"piece", pg.piece ? ordered_json(*pg.piece) : ordered_json(nullptr)}, {"rules", std::move(rules)}});
    }
    movers.push_back({{"mover", mg.mover ? ordered_json(*mg.mover) : ordered_json(nullptr)},
                      {"label", mover_label(mg.mover)},
                      {"pieces", std::move(pieces)}});
  }
  sections.push_back({{"title", kSectionTitles[4]}, {"groups", std::move(movers)}, {"leaf_count", leaf_count}});
  j["sections"] = std::move(sections);
  ordered_json paths = ordered_json::array();
  for (const Asset& a : assets) paths.push_back(a.path);
  j["assets"] = std::move(paths);

  return {std::move(h), j.dump(2) + "\n"};
}

}  // namespace ludman
