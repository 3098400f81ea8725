// SVG diagrams of board states with move and ending highlights.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ludman/engine.hpp"

namespace ludman {

enum class HighlightMode { SelectedOnly, AllSimilar };
enum class DotColour { Red, Green };

struct ArrowMark {
  SiteId from = 0;
  SiteId to = 0;
};

struct DotMark {
  SiteId site = 0;
  DotColour colour = DotColour::Red;
};

struct HighlightSpec {
  std::vector<ArrowMark> arrows;
  std::vector<DotMark> dots;
  HighlightMode mode = HighlightMode::SelectedOnly;
};

inline constexpr double kSquareCell = 48.0;
inline constexpr double kHexRadius = 28.0;
inline constexpr double kPadding = 16.0;

/// A red arrow when the move changes the piece's location, else a red dot on its site.
HighlightSpec move_highlight(const Move& move);

/// SVG 1.1 document: one `cell` element per site, one `piece` group per occupied
/// site, then the highlight marks (`arrow` groups, `dot red` / `dot green` circles).
std::string render_board(const GameSpec& spec, const GameState& state, const HighlightSpec& highlights = {});

struct SvgPair {
  std::string before;
  std::string after;
};

/// Before image carries the highlight (every similar legal move in AllSimilar
/// mode); the after image shows the resulting state without marks.
/// Throws EngineError(IllegalMove) when the move is not legal in `before`.
SvgPair render_move_pair(const GameSpec& spec, const GameState& before, const Move& move, HighlightMode mode);

/// Final move of a game: the before image marks the move, the after image keeps
/// its dot (if any) and adds green dots on the winning sites.
SvgPair render_ending_pair(const GameSpec& spec, const GameState& before, const Move& move,
                           const std::vector<SiteId>& winning_sites);

std::string escape_xml(std::string_view text);

}  // namespace ludman
