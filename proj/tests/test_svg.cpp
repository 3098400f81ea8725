#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ludman/svg.hpp"
#include "ludman/taxonomy.hpp"
#include "support.hpp"

using namespace ludman;
namespace pt = boost::property_tree;

namespace {

pt::ptree parse_xml(const std::string& text) {
  std::istringstream in(text);
  pt::ptree tree;
  pt::read_xml(in, tree);
  return tree;
}

void collect(const pt::ptree& node, const std::string& tag, std::vector<const pt::ptree*>& out) {
  for (const auto& [name, child] : node) {
    if (name == "<xmlattr>") continue;
    if (name == tag) out.push_back(&child);
    collect(child, tag, out);
  }
}

std::map<std::string, int> class_counts(const std::string& svg) {
  pt::ptree tree = parse_xml(svg);
  std::map<std::string, int> counts;
  std::function<void(const pt::ptree&)> walk = [&](const pt::ptree& node) {
    for (const auto& [name, child] : node) {
      if (name == "<xmlattr>") continue;
      if (auto cls = child.get_optional<std::string>("<xmlattr>.class")) ++counts[*cls];
      walk(child);
    }
  };
  walk(tree);
  return counts;
}

struct Centre {
  double x = 0;
  double y = 0;
};

std::map<std::string, Centre> hex_centres(const std::string& svg) {
  pt::ptree tree = parse_xml(svg);
  std::vector<const pt::ptree*> polys;
  collect(tree, "polygon", polys);
  std::map<std::string, Centre> out;
  for (const pt::ptree* p : polys) {
    if (p->get("<xmlattr>.class", "") != "cell") continue;
    std::istringstream pts(p->get<std::string>("<xmlattr>.points"));
    Centre c;
    std::string pair;
    int n = 0;
    while (pts >> pair) {
      auto comma = pair.find(',');
      c.x += std::stod(pair.substr(0, comma));
      c.y += std::stod(pair.substr(comma + 1));
      ++n;
    }
    out[p->get<std::string>("<xmlattr>.data-site")] = {c.x / n, c.y / n};
  }
  return out;
}

}  // namespace

TEST_CASE("square board geometry") {
  GameSpec spec = testing::corpus("TicTacToe");
  const std::string svg = render_board(spec, initial_state(spec));
  pt::ptree tree = parse_xml(svg);
  CHECK(tree.get<std::string>("svg.<xmlattr>.width") == "176.00");
  CHECK(tree.get<std::string>("svg.<xmlattr>.version") == "1.1");
  CHECK(tree.get<std::string>("svg.title") == "Tic-Tac-Toe");
  std::vector<const pt::ptree*> rects;
  collect(tree, "rect", rects);
  REQUIRE(rects.size() == 9);
  // A1 sits bottom left, C3 top right.
  for (const pt::ptree* r : rects) {
    const std::string label = r->get<std::string>("<xmlattr>.data-site");
    const int col = label[0] - 'A';
    const int row = label[1] - '1';
    CHECK(r->get<double>("<xmlattr>.x") == doctest::Approx(16 + 48 * col));
    CHECK(r->get<double>("<xmlattr>.y") == doctest::Approx(16 + 48 * (2 - row)));
  }
}

TEST_CASE("hex cells tile with neighbours one cell width apart") {
  GameSpec spec = testing::corpus("Hex");
  auto centres = hex_centres(render_board(spec, initial_state(spec)));
  REQUIRE(centres.size() == 121);
  const double width = std::sqrt(3.0) * kHexRadius;
  for (const Site& s : spec.board.sites()) {
    std::set<SiteId> adjacent;
    for (SiteId n : spec.board.neighbours(s.index, DirectionClass::Adjacent)) adjacent.insert(n);
    for (const Site& t : spec.board.sites()) {
      if (t.index == s.index) continue;
      const Centre a = centres[s.label];
      const Centre b = centres[t.label];
      const double d = std::hypot(a.x - b.x, a.y - b.y);
      if (adjacent.count(t.index)) {
        CHECK(d == doctest::Approx(width).epsilon(0.001));
      } else {
        CHECK(d > width * 1.5);
      }
    }
  }
  // A1 is the bottom corner of the diamond.
  for (const auto& [label, c] : centres) CHECK(c.y <= centres["A1"].y + 1e-9);
}

TEST_CASE("one piece group per occupied site") {
  for (const char* name : {"Amazons", "Breakthrough"}) {
    GameSpec spec = testing::corpus(name);
    GameState s = initial_state(spec);
    auto counts = class_counts(render_board(spec, s));
    CHECK(counts["cell"] == static_cast<int>(spec.board.size()));
    CHECK(counts["piece"] == static_cast<int>(s.occupied()));
    CHECK(counts["arrow"] == 0);
  }
}

TEST_CASE("move highlights") {
  GameSpec bt = testing::corpus("Breakthrough");
  GameState s = initial_state(bt);
  auto moves = legal_moves(bt, s);
  HighlightSpec h = move_highlight(moves[0]);
  CHECK(h.arrows.size() == 1);
  CHECK(h.dots.empty());

  SvgPair one = render_move_pair(bt, s, moves[0], HighlightMode::SelectedOnly);
  CHECK(class_counts(one.before)["arrow"] == 1);
  CHECK(class_counts(one.after)["arrow"] == 0);
  CHECK(class_counts(one.after)["piece"] == 32);

  SvgPair all = render_move_pair(bt, s, moves[0], HighlightMode::AllSimilar);
  CHECK(class_counts(all.before)["arrow"] == static_cast<int>(similar_legal_moves(s, moves[0], bt).size()));
  CHECK(all.after == one.after);

  GameSpec ttt = testing::corpus("TicTacToe");
  GameState t = initial_state(ttt);
  auto adds = legal_moves(ttt, t);
  auto pair = render_move_pair(ttt, t, adds[4], HighlightMode::AllSimilar);
  CHECK(class_counts(pair.before)["dot red"] == 9);
  CHECK(class_counts(render_move_pair(ttt, t, adds[4], HighlightMode::SelectedOnly).before)["dot red"] == 1);

  Move bogus = adds[0];
  bogus.to = 42;
  CHECK_THROWS_AS(render_move_pair(ttt, t, bogus, HighlightMode::SelectedOnly), EngineError);
}

TEST_CASE("ending images mark the winning line") {
  GameSpec spec = testing::corpus("TicTacToe");
  auto traces = run_playouts(spec, 0, 20);
  for (const auto& trace : traces) {
    if (trace.outcome.outcome != Outcome::Win) continue;
    GameState before = replay(spec, trace, trace.moves.size() - 1);
    SvgPair p = render_ending_pair(spec, before, trace.moves.back(), trace.outcome.winning_sites);
    auto b = class_counts(p.before);
    auto a = class_counts(p.after);
    CHECK(b["dot red"] == 1);
    CHECK(b["dot green"] == 0);
    CHECK(a["dot red"] == 1);
    CHECK(a["dot green"] == 3);
    CHECK(a["piece"] == static_cast<int>(trace.moves.size()));
  }
}

TEST_CASE("names are escaped") {
  CHECK(escape_xml(R"(a<b & "c">)") == "a&lt;b &amp; &quot;c&quot;&gt;");
  std::string text = testing::corpus_text("TicTacToe");
  text.replace(text.find("Tic-Tac-Toe"), 11, "X & <O>");
  GameSpec spec = compile_text(text);
  CHECK(parse_xml(render_board(spec, initial_state(spec))).get<std::string>("svg.title") == "X & <O>");
}
