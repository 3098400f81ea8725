#include "ludman/strategy.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "ludman/sexpr.hpp"

namespace ludman {

std::string importance_bucket(double weight) {
  const double w = std::abs(weight);
  if (w < 0.2) return "very low importance";
  if (w < 0.4) return "low importance";
  if (w < 0.6) return "moderate importance";
  if (w < 0.8) return "high importance";
  return "very high importance";
}

std::vector<std::string> explain_heuristics(const std::vector<HeuristicEntry>& entries, const GameSpec& spec) {
  std::vector<std::string> lines;
  for (const HeuristicEntry& e : entries) {
    if (!std::isfinite(e.weight)) {
      throw StrategyError(StrategyErrorKind::BadHeuristics, "heuristic weights must be finite");
    }
    if (e.kind == HeuristicKind::Material) {
      bool known = false;
      for (const PieceSpec& p : spec.pieces) known = known || p.base == e.piece || p.name == e.piece;
      if (!known) {
        throw StrategyError(StrategyErrorKind::UnknownPieceName,
                            fmt::format("'{}' is not a piece of {}", e.piece, spec.name));
      }
    }
    if (e.weight == 0) continue;
    const char* verb = e.weight > 0 ? "maximise" : "minimise";
    const std::string importance = importance_bucket(e.weight);
    switch (e.kind) {
      case HeuristicKind::Material:
        lines.push_back(fmt::format("Try to {} the number of {}(s) you control ({})", verb, e.piece, importance));
        break;
      case HeuristicKind::Mobility:
        lines.push_back(fmt::format("Try to {} the number of moves available to you ({})", verb, importance));
        break;
      case HeuristicKind::LineCompletion:
        if (e.weight > 0) {
          lines.push_back(fmt::format("Try to work towards completing lines of {} of your pieces ({})", e.length, importance));
        } else {
          lines.push_back(fmt::format("Try to avoid completing lines of {} of your pieces ({})", e.length, importance));
        }
        break;
    }
  }
  return lines;
}

namespace {

double weight_of(const RawNode& node) {
  if (node.kind == NodeKind::Number) return static_cast<double>(node.number);
  if (node.kind == NodeKind::Symbol) {
    double value = 0;
    const char* first = node.text.data();
    const char* last = first + node.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc() && ptr == last && std::isfinite(value)) return value;
  }
  throw StrategyError(StrategyErrorKind::BadHeuristics,
                      fmt::format("expected a weight at offset {}", node.span.begin));
}

}  // namespace

std::vector<HeuristicEntry> parse_heuristics(std::string_view text) {
  RawNode root = parse(text);
  if (!root.is_call("heuristics")) {
    throw StrategyError(StrategyErrorKind::BadHeuristics, "expected (heuristics ...)");
  }
  std::vector<const RawNode*> items;
  for (const RawNode& child : root.children) {
    if (child.kind == NodeKind::Collection) {
      for (const RawNode& item : child.children) items.push_back(&item);
    } else {
      items.push_back(&child);
    }
  }
  std::vector<HeuristicEntry> out;
  for (const RawNode* item : items) {
    const auto& args = item->children;
    HeuristicEntry e;
    if (item->is_call("material") && args.size() == 2 && args[0].kind == NodeKind::Text) {
      e.kind = HeuristicKind::Material;
      e.piece = args[0].text;
      e.weight = weight_of(args[1]);
    } else if (item->is_call("mobility") && args.size() == 1) {
      e.kind = HeuristicKind::Mobility;
      e.weight = weight_of(args[0]);
    } else if (item->is_call("lineCompletion") && args.size() == 2 && args[0].kind == NodeKind::Number &&
               args[0].number >= 2) {
      e.kind = HeuristicKind::LineCompletion;
      e.length = static_cast<int>(args[0].number);
      e.weight = weight_of(args[1]);
    } else {
      throw StrategyError(StrategyErrorKind::BadHeuristics,
                          fmt::format("unrecognised heuristic '{}' at offset {}", print_canonical(*item), item->span.begin));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace ludman
