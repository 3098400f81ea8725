// Assembly of the manual webpage and its machine-readable twin.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ludman/taxonomy.hpp"

namespace ludman {

/// A file of the output tree, path relative to the game directory.
struct Asset {
  std::string path;
  std::string content;
};

struct EndingEntry {
  EndingExample example;
  std::string before;  // asset paths
  std::string after;
};

struct MoveEntry {
  DistinctMove move;
  std::string before;
  std::string after;
};

struct ManualInputs {
  std::vector<std::string> translation;
  std::optional<std::vector<std::string>> strategy;  // nullopt: no heuristics supplied
  std::string setup_image;
  std::vector<EndingEntry> endings;
  std::vector<MoveEntry> moves;  // sorted by signature
  std::vector<LudemeId> unexercised;
};

class MissingAsset : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kSectionTitles[] = {"Rules", "Heuristics", "Setup", "Endings", "Moves"};
inline constexpr const char* kNoStrategy = "No strategy information available.";

struct ManualDocument {
  std::string html;
  std::string json;
};

/// Throws MissingAsset when an image path is not among `assets`.
ManualDocument build_manual(const GameSpec& spec, const ManualInputs& inputs, const std::vector<Asset>& assets);

/// "Player one wins", "Players one and two win", "Draw".
std::string outcome_text(Outcome outcome, const std::vector<int>& players);

}  // namespace ludman
