// ludman: compile .lud games and generate their manuals.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ludman/compiler.hpp"
#include "ludman/english.hpp"
#include "ludman/export.hpp"
#include "ludman/pipeline.hpp"

namespace fs = std::filesystem;
using namespace ludman;

namespace {

enum Exit { kOk = 0, kFailure = 1, kNotFound = 2, kBadGame = 3, kPlayoutLimit = 4 };

struct RunError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw RunError{kNotFound, fmt::format("{}: no such file", path)};
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in) throw RunError{kNotFound, fmt::format("{}: cannot read file", path)};
  return ss.str();
}

GameSpec load_game(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return compile_text(text);
  } catch (const ParseError& e) {
    auto at = line_col(text, e.position());
    throw RunError{kBadGame, fmt::format("{}:{}:{}: parse error: {}", path, at.line, at.column, e.what())};
  } catch (const CompileError& e) {
    auto at = line_col(text, e.span().begin);
    throw RunError{kBadGame, fmt::format("{}:{}:{}: {}: {}", path, at.line, at.column, to_string(e.kind()), e.what())};
  }
}

std::vector<HeuristicEntry> load_heuristics(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_heuristics(text);
  } catch (const ParseError& e) {
    auto at = line_col(text, e.position());
    throw RunError{kBadGame, fmt::format("{}:{}:{}: parse error: {}", path, at.line, at.column, e.what())};
  } catch (const StrategyError& e) {
    throw RunError{kBadGame, fmt::format("{}: {}", path, e.what())};
  }
}

std::string end_label(const GameSpec& spec, LudemeId rule) {
  if (rule == kNoLudeme) return "no legal moves";
  return ending_sentence(rule, spec);
}

void print_stats(const GameSpec& spec, const GenerateOptions& options) {
  auto traces = run_playouts(spec, options.seed, options.playouts, options.threads);
  std::map<std::tuple<Outcome, std::vector<int>, LudemeId>, std::size_t> outcomes;
  std::size_t total = 0;
  for (const auto& t : traces) {
    ++outcomes[{t.outcome.outcome, t.outcome.players, t.outcome.end_rule}];
    total += t.moves.size();
  }
  std::cout << fmt::format("{}: {} playouts from seed {}\n", spec.name, traces.size(), options.seed);
  std::cout << "Outcomes:\n";
  for (const auto& [key, n] : outcomes) {
    const auto& [outcome, players, rule] = key;
    std::cout << fmt::format("  {:>5}  {} ({})\n", n, outcome_text(outcome, players), end_label(spec, rule));
  }
  std::cout << fmt::format("Average length: {:.2f} moves\n",
                           traces.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(traces.size()));
  auto moves = collect_distinct(traces, spec);
  std::cout << fmt::format("Distinct moves: {}\n", moves.size());
  for (const auto& m : moves) std::cout << fmt::format("  {}  {}\n", m.id, to_string(m.signature));
  auto missing = unexercised_generators(moves, spec);
  const auto generators = spec.generator_ids().size();
  std::cout << fmt::format("Coverage: {} of {} move rules exercised\n", generators - missing.size(), generators);
  for (LudemeId id : missing) std::cout << fmt::format("  never used: {}\n", rule_sentence(id, spec));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile Ludii-style game descriptions and generate game manuals"};
  app.require_subcommand(1);

  std::vector<std::string> games;
  std::size_t playouts = 100;
  std::uint64_t seed = 0;
  std::string out_dir = "out";
  std::string heuristics;
  bool no_similar = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "text";

  auto add_game = [&](CLI::App* cmd) { cmd->add_option("-g,--game", games, ".lud file(s)")->required(); };
  auto add_playouts = [&](CLI::App* cmd) {
    cmd->add_option("-n,--playouts", playouts, "number of random playouts")->check(CLI::PositiveNumber);
    cmd->add_option("-s,--seed", seed, "base seed; playout i uses seed + i");
    cmd->add_option("-j,--threads", threads, "playout threads")->check(CLI::PositiveNumber);
  };

  auto* generate = app.add_subcommand("generate", "write manual.html, manual.json and SVG images");
  add_game(generate);
  add_playouts(generate);
  generate->add_option("-o,--out", out_dir, "output directory");
  generate->add_option("--heuristics", heuristics, "heuristics file for the strategy section");
  generate->add_flag("--no-similar", no_similar, "highlight only the selected move in move images");
  generate->add_option("--format", format, "'json' also dumps every playout trace")->check(CLI::IsMember({"text", "json"}));

  auto* translate = app.add_subcommand("translate", "print the English rules");
  add_game(translate);

  auto* stats = app.add_subcommand("playout-stats", "print outcome frequencies and move coverage");
  add_game(stats);
  add_playouts(stats);
  stats->add_option("--format", format, "'json' prints the taxonomy document")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<std::vector<HeuristicEntry>> entries;
    if (!heuristics.empty()) entries = load_heuristics(heuristics);
    for (const auto& path : games) {
      const GameSpec spec = load_game(path);
      GenerateOptions options;
      options.playouts = playouts;
      options.seed = seed;
      options.threads = threads;
      options.similar = !no_similar;
      options.heuristics = entries;
      options.dump_traces = format == "json";
      try {
        if (*translate) {
          std::cout << translate_game(spec);
        } else if (*stats) {
          if (format == "json") {
            auto traces = run_playouts(spec, seed, playouts, threads);
            auto moves = collect_distinct(traces, spec);
            std::cout << taxonomy_to_json(spec, playouts, seed, moves, collect_endings(traces, spec),
                                          unexercised_generators(moves, spec))
                             .dump(2)
                      << "\n";
          } else {
            print_stats(spec, options);
          }
        } else {
          GeneratedManual manual = generate_manual(spec, options);
          write_manual(out_dir, manual);
          std::cout << (fs::path(out_dir) / manual.directory / "manual.html").string() << "\n";
          if (!manual.unexercised.empty()) {
            std::cerr << fmt::format("warning: {}: {} move rule(s) never used in {} playouts; try more playouts\n",
                                     path, manual.unexercised.size(), playouts);
          }
        }
      } catch (const EngineError& e) {
        if (e.kind() == EngineErrorKind::PlayoutLimitExceeded) throw RunError{kPlayoutLimit, fmt::format("{}: {}", path, e.what())};
        throw RunError{kFailure, fmt::format("{}: {}", path, e.what())};
      } catch (const StrategyError& e) {
        throw RunError{kBadGame, fmt::format("{}: {}", heuristics, e.what())};
      }
    }
  } catch (const RunError& e) {
    std::cerr << "ludman: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "ludman: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
