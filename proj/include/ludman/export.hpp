// JSON documents for traces and taxonomies.
#pragma once

#include <nlohmann/json.hpp>

#include "ludman/taxonomy.hpp"

namespace ludman {

using ordered_json = nlohmann::ordered_json;

ordered_json move_to_json(const Move& move, const GameSpec& spec);

/// {seed, moves: [{mover, piece, origin, from, to, actions: [[type, ...args]]}], outcome}
ordered_json trace_to_json(const PlayoutTrace& trace, const GameSpec& spec);

/// {game, playouts, base_seed, signatures: [...], endings: [...], coverage: {...}}
ordered_json taxonomy_to_json(const GameSpec& spec, std::size_t playouts, std::uint64_t base_seed,
                              const std::vector<DistinctMove>& moves, const std::vector<EndingExample>& endings,
                              const std::vector<LudemeId>& unexercised);

}  // namespace ludman
