#include "ludman/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ludman/taxonomy.hpp"

namespace ludman {

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

HighlightSpec move_highlight(const Move& move) {
  HighlightSpec h;
  if (move.from && move.to && *move.from != *move.to) {
    h.arrows.push_back({*move.from, *move.to});
  } else if (move.to) {
    h.dots.push_back({*move.to, DotColour::Red});
  }
  return h;
}

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

std::string num(double v) {
  if (std::abs(v) < 0.005) v = 0;  // avoid "-0.00"
  return fmt::format("{:.2f}", v);
}

class Layout {
 public:
  explicit Layout(const BoardGraph& board) : board_(board) {
    const std::size_t n = board.size();
    centres_.resize(n);
    double min_x = std::numeric_limits<double>::max();
    double min_y = min_x;
    double max_x = std::numeric_limits<double>::lowest();
    double max_y = max_x;
    const double hx = hex() ? std::sqrt(3.0) * kHexRadius / 2 : kSquareCell / 2;
    const double hy = hex() ? kHexRadius : kSquareCell / 2;
    for (std::size_t i = 0; i < n; ++i) {
      const Site& s = board.site(static_cast<SiteId>(i));
      Point p;
      if (hex()) {
        // Column steps go up-right (NE), row steps go up-left (NW).
        const double w = std::sqrt(3.0) * kHexRadius;
        p.x = (s.column - s.row) * w / 2;
        p.y = -(s.column + s.row) * 1.5 * kHexRadius;
      } else {
        p.x = s.column * kSquareCell;
        p.y = (board.height() - 1 - s.row) * kSquareCell;
      }
      centres_[i] = p;
      min_x = std::min(min_x, p.x - hx);
      max_x = std::max(max_x, p.x + hx);
      min_y = std::min(min_y, p.y - hy);
      max_y = std::max(max_y, p.y + hy);
    }
    for (auto& p : centres_) {
      p.x += kPadding - min_x;
      p.y += kPadding - min_y;
    }
    width_ = max_x - min_x + 2 * kPadding;
    height_ = max_y - min_y + 2 * kPadding;
  }

  bool hex() const { return board_.tiling() == Tiling::Hexagonal; }
  Point centre(SiteId s) const { return centres_.at(static_cast<std::size_t>(s)); }
  double width() const { return width_; }
  double height() const { return height_; }
  double glyph() const { return hex() ? kHexRadius * 0.6 : kSquareCell * 0.36; }

  std::string cell(SiteId s) const {
    Point c = centre(s);
    const std::string& label = board_.site(s).label;
    if (!hex()) {
      return fmt::format(R"(<rect class="cell" data-site="{}" x="{}" y="{}" width="{}" height="{}"/>)", label,
                         num(c.x - kSquareCell / 2), num(c.y - kSquareCell / 2), num(kSquareCell), num(kSquareCell));
    }
    std::string points;
    for (int k = 0; k < 6; ++k) {
      const double a = (60.0 * k - 90.0) * std::acos(-1.0) / 180.0;
      if (k) points += ' ';
      points += num(c.x + kHexRadius * std::cos(a)) + "," + num(c.y + kHexRadius * std::sin(a));
    }
    return fmt::format(R"(<polygon class="cell" data-site="{}" points="{}"/>)", label, points);
  }

 private:
  const BoardGraph& board_;
  std::vector<Point> centres_;
  double width_ = 0;
  double height_ = 0;
};

std::string glyph(const PieceSpec& piece, Point c, double g) {
  const char* fill = piece.owner == 1 ? "#ffffff" : piece.owner == kNeutral ? "#9a9a9a" : "#111111";
  const char* stroke = piece.owner == 2 ? "#111111" : "#000000";
  const std::string open = fmt::format(R"(<g class="piece" data-piece="{}">)", escape_xml(piece.name));
  std::string body;
  const std::string& b = piece.base;
  if (b == "Disc" || b == "Marker") {
    body = fmt::format(R"(<circle cx="{}" cy="{}" r="{}" fill="{}" stroke="{}" stroke-width="2"/>)", num(c.x), num(c.y),
                       num(g), fill, stroke);
  } else if (b == "Cross") {
    const double d = g * 0.8;
    const char* ink = piece.owner == 1 ? "#000000" : "#111111";
    body = fmt::format(R"(<path d="M{} {} L{} {} M{} {} L{} {}" stroke="{}" stroke-width="5" stroke-linecap="round" fill="none"/>)",
                       num(c.x - d), num(c.y - d), num(c.x + d), num(c.y + d), num(c.x - d), num(c.y + d), num(c.x + d),
                       num(c.y - d), ink);
  } else if (b == "Queen") {
    const double r = g * 0.8;
    body = fmt::format(R"(<circle cx="{}" cy="{}" r="{}" fill="{}" stroke="{}" stroke-width="2"/>)", num(c.x),
                       num(c.y + g * 0.2), num(r), fill, stroke);
    body += fmt::format(R"(<polygon points="{},{} {},{} {},{} {},{} {},{} {},{} {},{}" fill="{}" stroke="{}" stroke-width="1.5"/>)",
                        num(c.x - r * 0.8), num(c.y - r * 0.3), num(c.x - r * 0.8), num(c.y - r * 1.3),
                        num(c.x - r * 0.4), num(c.y - r * 0.8), num(c.x), num(c.y - r * 1.4), num(c.x + r * 0.4),
                        num(c.y - r * 0.8), num(c.x + r * 0.8), num(c.y - r * 1.3), num(c.x + r * 0.8),
                        num(c.y - r * 0.3), fill, stroke);
  } else if (b == "Dot") {
    body = fmt::format(R"(<circle cx="{}" cy="{}" r="{}" fill="#9a9a9a" stroke="#555555" stroke-width="1"/>)", num(c.x),
                       num(c.y), num(g * 0.45));
  } else if (b == "Pawn") {
    body = fmt::format(R"(<polygon points="{},{} {},{} {},{}" fill="{}" stroke="{}" stroke-width="2"/>)", num(c.x),
                       num(c.y - g), num(c.x + g * 0.9), num(c.y + g * 0.8), num(c.x - g * 0.9), num(c.y + g * 0.8),
                       fill, stroke);
  } else {
    const char* ink = piece.owner == 1 || piece.owner == kNeutral ? "#000000" : "#ffffff";
    body = fmt::format(R"(<circle cx="{}" cy="{}" r="{}" fill="{}" stroke="{}" stroke-width="2"/>)", num(c.x), num(c.y),
                       num(g), fill, stroke);
    body += fmt::format(R"(<text x="{}" y="{}" text-anchor="middle" font-size="{}" font-family="sans-serif" fill="{}">{}</text>)",
                        num(c.x), num(c.y + g * 0.4), num(g * 1.1), ink, escape_xml(b.substr(0, 1)));
  }
  return open + body + "</g>";
}

std::string arrow(Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  const double ux = dx / len;
  const double uy = dy / len;
  const double head = 12.0;
  const Point base{b.x - ux * head, b.y - uy * head};
  const Point left{base.x - uy * head * 0.5, base.y + ux * head * 0.5};
  const Point right{base.x + uy * head * 0.5, base.y - ux * head * 0.5};
  return fmt::format(
      R"(<g class="arrow"><line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#e00000" stroke-width="4"/><polygon points="{},{} {},{} {},{}" fill="#e00000"/></g>)",
      num(a.x), num(a.y), num(base.x), num(base.y), num(b.x), num(b.y), num(left.x), num(left.y), num(right.x),
      num(right.y));
}

}  // namespace

std::string render_board(const GameSpec& spec, const GameState& state, const HighlightSpec& highlights) {
  Layout layout(spec.board);
  std::string out;
  out += R"(<?xml version="1.0" encoding="UTF-8"?>)";
  out += '\n';
  out += fmt::format(R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">)",
                     num(layout.width()), num(layout.height()), num(layout.width()), num(layout.height()));
  out += '\n';
  out += fmt::format("<title>{}</title>\n", escape_xml(spec.name));
  out += R"(<g class="board" fill="#e8d3a9" stroke="#5a4630" stroke-width="1.5">)";
  out += '\n';
  for (std::size_t s = 0; s < spec.board.size(); ++s) out += layout.cell(static_cast<SiteId>(s)) + '\n';
  out += "</g>\n";
  for (std::size_t s = 0; s < state.contents.size(); ++s) {
    int p = state.contents[s];
    if (p < 0) continue;
    out += glyph(spec.pieces[static_cast<std::size_t>(p)], layout.centre(static_cast<SiteId>(s)), layout.glyph()) + '\n';
  }
  for (const ArrowMark& a : highlights.arrows) out += arrow(layout.centre(a.from), layout.centre(a.to)) + '\n';
  for (const DotMark& d : highlights.dots) {
    Point c = layout.centre(d.site);
    const bool red = d.colour == DotColour::Red;
    out += fmt::format(R"(<circle class="dot {}" cx="{}" cy="{}" r="{}" fill="{}" stroke="#ffffff" stroke-width="1"/>)",
                       red ? "red" : "green", num(c.x), num(c.y), num(red ? 7.0 : 9.0), red ? "#e00000" : "#00a000");
    out += '\n';
  }
  out += "</svg>\n";
  return out;
}

SvgPair render_move_pair(const GameSpec& spec, const GameState& before, const Move& move, HighlightMode mode) {
  GameState after = apply_move(before, move, spec);
  HighlightSpec h;
  h.mode = mode;
  std::vector<Move> marked =
      mode == HighlightMode::AllSimilar ? similar_legal_moves(before, move, spec) : std::vector<Move>{move};
  for (const Move& m : marked) {
    HighlightSpec one = move_highlight(m);
    h.arrows.insert(h.arrows.end(), one.arrows.begin(), one.arrows.end());
    h.dots.insert(h.dots.end(), one.dots.begin(), one.dots.end());
  }
  return {render_board(spec, before, h), render_board(spec, after, {})};
}

SvgPair render_ending_pair(const GameSpec& spec, const GameState& before, const Move& move,
                           const std::vector<SiteId>& winning_sites) {
  GameState after = apply_move(before, move, spec);
  HighlightSpec end;
  for (SiteId s : winning_sites) end.dots.push_back({s, DotColour::Green});
  if (move.to) end.dots.push_back({*move.to, DotColour::Red});
  return {render_board(spec, before, move_highlight(move)), render_board(spec, after, end)};
}

}  // namespace ludman
