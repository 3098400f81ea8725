// Untyped S-expression trees for .lud game descriptions.
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ludman {

/// Half-open byte range [begin, end) into the parsed text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

enum class NodeKind { Symbol, Number, Text, Call, Collection };

/// One node of the parsed description.
///
/// Symbol and Call use `text` for the token / head name, Text holds the
/// unquoted string contents, Number holds `number`. Call arguments and
/// Collection items live in `children`.
struct RawNode {
  NodeKind kind = NodeKind::Symbol;
  std::string text;
  std::int64_t number = 0;
  std::vector<RawNode> children;
  Span span;
  Span head_span;  // Call only

  static RawNode symbol(std::string name, Span span = {});
  static RawNode integer(std::int64_t value, Span span = {});
  static RawNode string(std::string value, Span span = {});
  static RawNode call(std::string head, std::vector<RawNode> args, Span span = {});
  static RawNode collection(std::vector<RawNode> items, Span span = {});

  bool is_call(std::string_view head) const { return kind == NodeKind::Call && text == head; }
  bool is_symbol(std::string_view name) const { return kind == NodeKind::Symbol && text == name; }

  /// Structural equality; spans are ignored.
  friend bool operator==(const RawNode& a, const RawNode& b);
};

std::string_view to_string(NodeKind kind);

enum class ParseErrorKind {
  UnbalancedParen,
  UnterminatedString,
  EmptyInput,
  TrailingContent,
  MissingHead,  // `(` not followed by a symbol
  NestingTooDeep,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

/// Maximum bracket nesting accepted by parse().
inline constexpr std::size_t kMaxNesting = 256;

/// Parses exactly one top-level form. `//` starts a comment running to end of line.
RawNode parse(std::string_view text);

/// Single-line canonical form: one space between elements, strings re-quoted.
std::string print_canonical(const RawNode& node);

/// 1-based line and column of a byte offset, for diagnostics.
struct LineCol {
  std::size_t line = 1;
  std::size_t column = 1;
};
LineCol line_col(std::string_view text, std::size_t offset);

}  // namespace ludman
