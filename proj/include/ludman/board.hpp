// Board graphs: sites, coordinate labels and directional adjacency.
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ludman {

using SiteId = int;

enum class BoardShape { Square, Rectangle, HexDiamond };
enum class Tiling { Square, Hexagonal };

/// Compass directions. Square grids use all eight; hexagonal grids use
/// NE, E, SE, SW, W and NW.
enum class Direction { N, NE, E, SE, S, SW, W, NW };
inline constexpr int kDirectionCount = 8;

enum class DirectionClass { Orthogonal, Diagonal, Adjacent };

std::string_view to_string(Direction d);
std::optional<Direction> direction_from_string(std::string_view name);
Direction opposite(Direction d);

struct Site {
  SiteId index = 0;
  std::string label;  // column letter(s) then 1-based row, e.g. "A4"
  int row = 0;        // 0 = bottom
  int column = 0;     // 0 = left
};

/// Sites are indexed row-major from the bottom-left corner, so A1 is site 0.
/// On hex diamonds `column` and `row` are the two rhombus axes; A1 is the
/// south corner and the NE/NW/SE/SW sides are the four rhombus edges.
class BoardGraph {
 public:
  static BoardGraph square(int n);
  static BoardGraph rectangle(int width, int height);
  static BoardGraph hex_diamond(int n);

  BoardShape shape() const { return shape_; }
  Tiling tiling() const { return shape_ == BoardShape::HexDiamond ? Tiling::Hexagonal : Tiling::Square; }
  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return sites_.size(); }

  const Site& site(SiteId id) const { return sites_.at(static_cast<std::size_t>(id)); }
  const std::vector<Site>& sites() const { return sites_; }
  std::optional<SiteId> find(std::string_view label) const;

  std::optional<SiteId> neighbour(SiteId id, Direction d) const;

  /// Directions of a class in the fixed order used for move generation.
  std::span<const Direction> directions(DirectionClass cls) const;
  std::vector<SiteId> neighbours(SiteId id, DirectionClass cls) const;

  /// Sites along a named side ("N", "SW", ...); empty if the side does not exist on this shape.
  std::vector<SiteId> side(std::string_view name) const;

  /// Player-relative directions: odd players face north, even players south.
  /// Undefined (nullopt) on hexagonal boards.
  std::optional<Direction> forward(int player) const;
  std::optional<Direction> forward_left(int player) const;
  std::optional<Direction> forward_right(int player) const;

 private:
  BoardGraph(BoardShape shape, int width, int height);

  BoardShape shape_;
  int width_;
  int height_;
  std::vector<Site> sites_;
  std::vector<std::array<SiteId, kDirectionCount>> steps_;  // -1 when off-board
};

/// Column letter(s) for a 0-based column: 0 -> "A", 25 -> "Z", 26 -> "AA".
std::string column_letters(int column);

}  // namespace ludman
