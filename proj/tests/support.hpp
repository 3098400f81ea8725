#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ludman/compiler.hpp"
#include "ludman/engine.hpp"

namespace testing {

inline std::filesystem::path source_dir() { return LUDMAN_SOURCE_DIR; }

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string corpus_text(const std::string& name) { return read_text(source_dir() / "corpus" / (name + ".lud")); }

inline ludman::GameSpec corpus(const std::string& name) { return ludman::compile_text(corpus_text(name)); }

inline ludman::GameSpec fixture(const std::string& file) {
  return ludman::compile_text(read_text(source_dir() / "tests" / "data" / file));
}

inline std::string golden(const std::string& name) { return read_text(source_dir() / "tests" / "golden" / (name + ".txt")); }

inline ludman::SiteId site(const ludman::GameSpec& spec, const std::string& label) {
  auto s = spec.board.find(label);
  if (!s) throw std::runtime_error("no site " + label);
  return *s;
}

// Initial state with the board replaced: 0 empty, 1 or 2 the first piece of that player.
inline ludman::GameState with_owners(const ludman::GameSpec& spec, const std::vector<int>& owner) {
  ludman::GameState s = ludman::initial_state(spec);
  for (std::size_t i = 0; i < owner.size(); ++i) {
    s.contents[i] = owner[i] == 0 ? -1 : spec.pieces_of(owner[i]).front();
  }
  return s;
}

}  // namespace testing
