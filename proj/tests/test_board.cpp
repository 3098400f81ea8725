#include <doctest.h>

#include <algorithm>
#include <set>

#include "ludman/board.hpp"
#include "ludman/compiler.hpp"
#include "ludman/sexpr.hpp"

using namespace ludman;

namespace {

// Independent neighbour count on an n x n rhombus with axial hex coordinates.
int hex_neighbour_oracle(int n, int c, int r) {
  const int offsets[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  int count = 0;
  for (const auto& o : offsets) {
    const int cc = c + o[0];
    const int rr = r + o[1];
    if (cc >= 0 && cc < n && rr >= 0 && rr < n) ++count;
  }
  return count;
}

void check_symmetric(const BoardGraph& b) {
  for (std::size_t s = 0; s < b.size(); ++s) {
    for (Direction d : b.directions(DirectionClass::Adjacent)) {
      auto nb = b.neighbour(static_cast<SiteId>(s), d);
      if (!nb) continue;
      CHECK(b.neighbour(*nb, opposite(d)) == std::optional<SiteId>(static_cast<SiteId>(s)));
    }
  }
}

}  // namespace

TEST_CASE("square 3 corner has two orthogonal and one diagonal neighbour") {
  BoardGraph b = build_board(parse("(board (square 3))"));
  CHECK(b.size() == 9);
  SiteId a1 = *b.find("A1");
  CHECK(a1 == 0);
  CHECK(b.neighbours(a1, DirectionClass::Orthogonal).size() == 2);
  CHECK(b.neighbours(a1, DirectionClass::Diagonal).size() == 1);
  CHECK(b.neighbours(*b.find("B2"), DirectionClass::Adjacent).size() == 8);
  check_symmetric(b);
}

TEST_CASE("square 10 labels run A1 to J10") {
  BoardGraph b = build_board(parse("(board (square 10))"));
  CHECK(b.size() == 100);
  REQUIRE(b.find("J4"));
  CHECK(b.site(*b.find("J4")).column == 9);
  CHECK(b.site(*b.find("J4")).row == 3);
  CHECK(b.site(99).label == "J10");
  CHECK_FALSE(b.find("K1"));
  std::set<std::string> labels;
  for (const Site& s : b.sites()) labels.insert(s.label);
  CHECK(labels.size() == 100);
}

TEST_CASE("hex diamond adjacency matches the rhombus oracle") {
  BoardGraph b = build_board(parse("(board (hex Diamond 11))"));
  CHECK(b.size() == 121);
  CHECK(b.tiling() == Tiling::Hexagonal);
  for (const Site& s : b.sites()) {
    CAPTURE(s.label);
    CHECK(static_cast<int>(b.neighbours(s.index, DirectionClass::Adjacent).size()) ==
          hex_neighbour_oracle(11, s.column, s.row));
  }
  CHECK(b.neighbours(*b.find("F6"), DirectionClass::Adjacent).size() == 6);
  CHECK(b.directions(DirectionClass::Diagonal).empty());
  check_symmetric(b);
}

TEST_CASE("hex sides are the four rhombus edges") {
  BoardGraph b = BoardGraph::hex_diamond(5);
  for (const char* side : {"NE", "NW", "SE", "SW"}) CHECK(b.side(side).size() == 5);
  CHECK(b.side("N").empty());
  auto ne = b.side("NE");
  auto sw = b.side("SW");
  for (SiteId s : ne) CHECK(b.site(s).column == 4);
  for (SiteId s : sw) CHECK(b.site(s).column == 0);
}

TEST_CASE("rectangle and forward directions") {
  BoardGraph b = BoardGraph::rectangle(4, 2);
  CHECK(b.size() == 8);
  CHECK(b.site(7).label == "D2");
  CHECK(b.side("N").size() == 4);
  CHECK(b.side("E").size() == 2);
  CHECK(b.forward(1) == Direction::N);
  CHECK(b.forward(2) == Direction::S);
  CHECK(b.forward_left(1) == Direction::NW);
  CHECK(b.forward_right(1) == Direction::NE);
  CHECK(b.forward_left(2) == Direction::SE);
  CHECK(b.forward_right(2) == Direction::SW);
  CHECK_FALSE(BoardGraph::hex_diamond(3).forward(1));
}

TEST_CASE("unsupported shapes are rejected") {
  for (const char* text : {"(board (circle 3))", "(board 3)", "(board (hex Star 3))"}) {
    CAPTURE(text);
    try {
      build_board(parse(text));
      FAIL("expected UnsupportedShape");
    } catch (const CompileError& e) {
      CHECK(e.kind() == CompileErrorKind::UnsupportedShape);
    }
  }
}

TEST_CASE("out-of-range sizes are invalid values") {
  for (const char* text : {"(board (hex Diamond 0))", "(board (square 27))", "(board (rectangle 3 -1))"}) {
    CAPTURE(text);
    try {
      build_board(parse(text));
      FAIL("expected InvalidValue");
    } catch (const CompileError& e) {
      CHECK(e.kind() == CompileErrorKind::InvalidValue);
    }
  }
}

TEST_CASE("column letters continue past Z") {
  CHECK(column_letters(0) == "A");
  CHECK(column_letters(25) == "Z");
  CHECK(column_letters(26) == "AA");
}
