// Validation of raw trees against the ludeme registry and compilation to GameSpec.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ludman/game_spec.hpp"
#include "ludman/registry.hpp"
#include "ludman/sexpr.hpp"

namespace ludman {

enum class CompileErrorKind {
  UnknownLudeme,
  ArityMismatch,
  BadArgumentKind,
  UnsupportedLudeme,
  UnsupportedShape,
  InvalidValue,  // well-formed but semantically wrong: unknown piece, site, side, player
};

std::string_view to_string(CompileErrorKind kind);

class CompileError : public std::runtime_error {
 public:
  CompileError(CompileErrorKind kind, Span span, const std::string& message);

  CompileErrorKind kind() const { return kind_; }
  Span span() const { return span_; }

 private:
  CompileErrorKind kind_;
  Span span_;
};

GameSpec compile(const RawNode& tree, const Registry& registry = Registry::builtin());

/// Convenience: parse then compile.
GameSpec compile_text(std::string_view text, const Registry& registry = Registry::builtin());

/// Builds a board from a `(board <shape>)` node. Throws CompileError(UnsupportedShape).
BoardGraph build_board(const RawNode& board);

}  // namespace ludman
