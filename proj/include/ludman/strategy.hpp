// Strategy sentences from weighted heuristics.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ludman/game_spec.hpp"

namespace ludman {

enum class HeuristicKind { Material, Mobility, LineCompletion };

struct HeuristicEntry {
  HeuristicKind kind = HeuristicKind::Material;
  std::string piece;  // Material
  int length = 0;     // LineCompletion
  double weight = 0;
};

enum class StrategyErrorKind { UnknownPieceName, BadHeuristics };

class StrategyError : public std::runtime_error {
 public:
  StrategyError(StrategyErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  StrategyErrorKind kind() const { return kind_; }

 private:
  StrategyErrorKind kind_;
};

/// "very low importance" for |w| < 0.2, then low, moderate, high in 0.2 steps,
/// "very high importance" from 0.8 upwards.
std::string importance_bucket(double weight);

/// One sentence per nonzero entry, in input order.
/// Throws StrategyError(UnknownPieceName) for Material entries naming no piece of the game.
std::vector<std::string> explain_heuristics(const std::vector<HeuristicEntry>& entries, const GameSpec& spec);

/// Reads `(heuristics { (material "Pawn" 0.15) (mobility 0.3) (lineCompletion 3 0.5) })`.
/// Throws ParseError for malformed text and StrategyError(BadHeuristics) for unknown entries.
std::vector<HeuristicEntry> parse_heuristics(std::string_view text);

}  // namespace ludman
