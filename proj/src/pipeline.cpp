#include "ludman/pipeline.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>

#include "ludman/english.hpp"
#include "ludman/export.hpp"
#include "ludman/svg.hpp"

namespace ludman {

std::string directory_name(const std::string& game) {
  std::string out = game;
  for (char& c : out) {
    if (c == '/' || c == '\\' || c == ' ' || c == ':') c = '_';
  }
  return out.empty() ? "game" : out;
}

GeneratedManual generate_manual(const GameSpec& spec, const GenerateOptions& options) {
  GeneratedManual out;
  out.directory = directory_name(spec.name);
  out.traces = run_playouts(spec, options.seed, options.playouts, options.threads);
  out.moves = collect_distinct(out.traces, spec);
  out.endings = collect_endings(out.traces, spec);
  out.unexercised = unexercised_generators(out.moves, spec);

  auto trace_for = [&](std::uint64_t seed) -> const PlayoutTrace& {
    return out.traces.at(static_cast<std::size_t>(seed - options.seed));
  };

  std::vector<Asset> images;
  ManualInputs inputs;
  inputs.translation = translate_lines(spec);
  if (options.heuristics) inputs.strategy = explain_heuristics(*options.heuristics, spec);
  inputs.unexercised = out.unexercised;

  inputs.setup_image = "svg/setup.svg";
  images.push_back({inputs.setup_image, render_board(spec, initial_state(spec))});

  const HighlightMode mode = options.similar ? HighlightMode::AllSimilar : HighlightMode::SelectedOnly;
  for (const DistinctMove& m : out.moves) {
    const PlayoutTrace& trace = trace_for(m.seed);
    GameState before = replay(spec, trace, m.index);
    SvgPair pair = render_move_pair(spec, before, trace.moves.at(m.index), mode);
    MoveEntry entry{m, fmt::format("svg/move-{}-before.svg", m.id), fmt::format("svg/move-{}-after.svg", m.id)};
    images.push_back({entry.before, std::move(pair.before)});
    images.push_back({entry.after, std::move(pair.after)});
    inputs.moves.push_back(std::move(entry));
  }

  for (const EndingExample& e : out.endings) {
    const PlayoutTrace& trace = trace_for(e.seed);
    EndingEntry entry{e, fmt::format("svg/ending-{}-before.svg", e.id), fmt::format("svg/ending-{}-after.svg", e.id)};
    if (trace.moves.empty()) {
      // The game was over before anyone moved: both images show the start.
      images.push_back({entry.before, render_board(spec, initial_state(spec))});
      images.push_back({entry.after, render_board(spec, initial_state(spec))});
    } else {
      GameState before = replay(spec, trace, trace.moves.size() - 1);
      SvgPair pair = render_ending_pair(spec, before, trace.moves.back(), e.winning_sites);
      images.push_back({entry.before, std::move(pair.before)});
      images.push_back({entry.after, std::move(pair.after)});
    }
    inputs.endings.push_back(std::move(entry));
  }

  ManualDocument doc = build_manual(spec, inputs, images);
  out.files = std::move(images);
  out.files.push_back({"manual.html", std::move(doc.html)});
  out.files.push_back({"manual.json", std::move(doc.json)});
  out.files.push_back(
      {"taxonomy.json",
       taxonomy_to_json(spec, options.playouts, options.seed, out.moves, out.endings, out.unexercised).dump(2) + "\n"});
  if (options.dump_traces) {
    for (const PlayoutTrace& t : out.traces) {
      out.files.push_back({fmt::format("traces/seed-{}.json", t.seed), trace_to_json(t, spec).dump(2) + "\n"});
    }
  }
  std::sort(out.files.begin(), out.files.end(), [](const Asset& a, const Asset& b) { return a.path < b.path; });
  return out;
}

void write_manual(const std::filesystem::path& root, const GeneratedManual& manual) {
  const std::filesystem::path dir = root / manual.directory;
  for (const Asset& file : manual.files) {
    const std::filesystem::path path = dir / file.path;
    std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    os << file.content;
    if (!os) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
  }
}

}  // namespace ludman
