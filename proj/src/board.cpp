#include "ludman/board.hpp"

#include <stdexcept>

namespace ludman {

namespace {

constexpr std::array<Direction, 4> kSquareOrthogonal{Direction::N, Direction::E, Direction::S, Direction::W};
constexpr std::array<Direction, 4> kSquareDiagonal{Direction::NE, Direction::SE, Direction::SW, Direction::NW};
constexpr std::array<Direction, 8> kSquareAdjacent{Direction::N,  Direction::NE, Direction::E,  Direction::SE,
                                                   Direction::S,  Direction::SW, Direction::W,  Direction::NW};
constexpr std::array<Direction, 6> kHexAdjacent{Direction::NE, Direction::E, Direction::SE,
                                                Direction::SW, Direction::W, Direction::NW};

struct Offset {
  int dc;
  int dr;
};

// (column, row) deltas indexed by Direction.
constexpr std::array<Offset, 8> kSquareOffsets{{{0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}}};
// Rhombus axes: NE and NW are the lattice vectors, E = NE - NW.
constexpr std::array<std::optional<Offset>, 8> kHexOffsets{
    {std::nullopt, Offset{1, 0}, Offset{1, -1}, Offset{0, -1}, std::nullopt, Offset{-1, 0}, Offset{-1, 1}, Offset{0, 1}}};

}  // namespace

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::N: return "N";
    case Direction::NE: return "NE";
    case Direction::E: return "E";
    case Direction::SE: return "SE";
    case Direction::S: return "S";
    case Direction::SW: return "SW";
    case Direction::W: return "W";
    case Direction::NW: return "NW";
  }
  return "?";
}

std::optional<Direction> direction_from_string(std::string_view name) {
  for (int i = 0; i < kDirectionCount; ++i) {
    auto d = static_cast<Direction>(i);
    if (to_string(d) == name) return d;
  }
  return std::nullopt;
}

Direction opposite(Direction d) { return static_cast<Direction>((static_cast<int>(d) + 4) % kDirectionCount); }

std::string column_letters(int column) {
  std::string out;
  int c = column + 1;
  while (c > 0) {
    int rem = (c - 1) % 26;
    out.insert(out.begin(), static_cast<char>('A' + rem));
    c = (c - 1) / 26;
  }
  return out;
}

BoardGraph::BoardGraph(BoardShape shape, int width, int height) : shape_(shape), width_(width), height_(height) {
  if (width < 1 || height < 1) throw std::invalid_argument("board dimensions must be positive");
  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  sites_.reserve(count);
  steps_.assign(count, {});
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      SiteId id = r * width + c;
      sites_.push_back(Site{id, column_letters(c) + std::to_string(r + 1), r, c});
    }
  }
  const bool hex = shape == BoardShape::HexDiamond;
  for (const auto& s : sites_) {
    auto& row = steps_[static_cast<std::size_t>(s.index)];
    for (int d = 0; d < kDirectionCount; ++d) {
      row[static_cast<std::size_t>(d)] = -1;
      std::optional<Offset> off = hex ? kHexOffsets[static_cast<std::size_t>(d)]
                                      : std::optional<Offset>(kSquareOffsets[static_cast<std::size_t>(d)]);
      if (!off) continue;
      int c = s.column + off->dc;
      int r = s.row + off->dr;
      if (c >= 0 && c < width && r >= 0 && r < height) row[static_cast<std::size_t>(d)] = r * width + c;
    }
  }
}

BoardGraph BoardGraph::square(int n) { return BoardGraph(BoardShape::Square, n, n); }

BoardGraph BoardGraph::rectangle(int width, int height) { return BoardGraph(BoardShape::Rectangle, width, height); }

BoardGraph BoardGraph::hex_diamond(int n) { return BoardGraph(BoardShape::HexDiamond, n, n); }

std::optional<SiteId> BoardGraph::find(std::string_view label) const {
  for (const auto& s : sites_) {
    if (s.label == label) return s.index;
  }
  return std::nullopt;
}

std::optional<SiteId> BoardGraph::neighbour(SiteId id, Direction d) const {
  SiteId n = steps_.at(static_cast<std::size_t>(id))[static_cast<std::size_t>(d)];
  if (n < 0) return std::nullopt;
  return n;
}

std::span<const Direction> BoardGraph::directions(DirectionClass cls) const {
  if (tiling() == Tiling::Hexagonal) {
    if (cls == DirectionClass::Diagonal) return {};
    return kHexAdjacent;
  }
  switch (cls) {
    case DirectionClass::Orthogonal: return kSquareOrthogonal;
    case DirectionClass::Diagonal: return kSquareDiagonal;
    case DirectionClass::Adjacent: return kSquareAdjacent;
  }
  return {};
}

std::vector<SiteId> BoardGraph::neighbours(SiteId id, DirectionClass cls) const {
  std::vector<SiteId> out;
  for (Direction d : directions(cls)) {
    if (auto n = neighbour(id, d)) out.push_back(*n);
  }
  return out;
}

std::vector<SiteId> BoardGraph::side(std::string_view name) const {
  std::vector<SiteId> out;
  auto pick = [&](auto pred) {
    for (const auto& s : sites_) {
      if (pred(s)) out.push_back(s.index);
    }
  };
  if (tiling() == Tiling::Hexagonal) {
    if (name == "SE") pick([](const Site& s) { return s.row == 0; });
    if (name == "SW") pick([](const Site& s) { return s.column == 0; });
    if (name == "NE") pick([&](const Site& s) { return s.column == width_ - 1; });
    if (name == "NW") pick([&](const Site& s) { return s.row == height_ - 1; });
  } else {
    if (name == "S") pick([](const Site& s) { return s.row == 0; });
    if (name == "W") pick([](const Site& s) { return s.column == 0; });
    if (name == "E") pick([&](const Site& s) { return s.column == width_ - 1; });
    if (name == "N") pick([&](const Site& s) { return s.row == height_ - 1; });
  }
  return out;
}

std::optional<Direction> BoardGraph::forward(int player) const {
  if (tiling() == Tiling::Hexagonal) return std::nullopt;
  return player % 2 == 1 ? Direction::N : Direction::S;
}

std::optional<Direction> BoardGraph::forward_left(int player) const {
  if (tiling() == Tiling::Hexagonal) return std::nullopt;
  return player % 2 == 1 ? Direction::NW : Direction::SE;
}

std::optional<Direction> BoardGraph::forward_right(int player) const {
  if (tiling() == Tiling::Hexagonal) return std::nullopt;
  return player % 2 == 1 ? Direction::NE : Direction::SW;
}

}  // namespace ludman
