// End-to-end manual generation for one compiled game.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ludman/manual.hpp"
#include "ludman/strategy.hpp"

namespace ludman {

struct GenerateOptions {
  std::size_t playouts = 100;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool similar = true;  // highlight all similar legal moves in move images
  std::optional<std::vector<HeuristicEntry>> heuristics;
  bool dump_traces = false;  // add traces/seed-<n>.json
};

struct GeneratedManual {
  std::string directory;    // game directory name under the output root
  std::vector<Asset> files;  // sorted by path
  std::vector<PlayoutTrace> traces;
  std::vector<DistinctMove> moves;
  std::vector<EndingExample> endings;
  std::vector<LudemeId> unexercised;
};

/// Directory name for a game: its name with path separators and spaces replaced by '_'.
std::string directory_name(const std::string& game);

/// Playouts, taxonomy, images, manual.html, manual.json and taxonomy.json.
GeneratedManual generate_manual(const GameSpec& spec, const GenerateOptions& options);

/// Writes every file under `root / manual.directory`.
void write_manual(const std::filesystem::path& root, const GeneratedManual& manual);

}  // namespace ludman
