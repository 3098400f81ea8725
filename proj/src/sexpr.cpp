#include "ludman/sexpr.hpp"

#include <charconv>
#include <fmt/format.h>

namespace ludman {

RawNode RawNode::symbol(std::string name, Span span) {
  RawNode n;
  n.kind = NodeKind::Symbol;
  n.text = std::move(name);
  n.span = span;
  return n;
}

RawNode RawNode::integer(std::int64_t value, Span span) {
  RawNode n;
  n.kind = NodeKind::Number;
  n.number = value;
  n.span = span;
  return n;
}

RawNode RawNode::string(std::string value, Span span) {
  RawNode n;
  n.kind = NodeKind::Text;
  n.text = std::move(value);
  n.span = span;
  return n;
}

RawNode RawNode::call(std::string head, std::vector<RawNode> args, Span span) {
  RawNode n;
  n.kind = NodeKind::Call;
  n.text = std::move(head);
  n.children = std::move(args);
  n.span = span;
  return n;
}

RawNode RawNode::collection(std::vector<RawNode> items, Span span) {
  RawNode n;
  n.kind = NodeKind::Collection;
  n.children = std::move(items);
  n.span = span;
  return n;
}

bool operator==(const RawNode& a, const RawNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Number:
      return a.number == b.number;
    case NodeKind::Symbol:
    case NodeKind::Text:
      return a.text == b.text;
    case NodeKind::Call:
      return a.text == b.text && a.children == b.children;
    case NodeKind::Collection:
      return a.children == b.children;
  }
  return false;
}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Symbol: return "symbol";
    case NodeKind::Number: return "number";
    case NodeKind::Text: return "string";
    case NodeKind::Call: return "call";
    case NodeKind::Collection: return "collection";
  }
  return "?";
}

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnbalancedParen: return "UnbalancedParen";
    case ParseErrorKind::UnterminatedString: return "UnterminatedString";
    case ParseErrorKind::EmptyInput: return "EmptyInput";
    case ParseErrorKind::TrailingContent: return "TrailingContent";
    case ParseErrorKind::MissingHead: return "MissingHead";
    case ParseErrorKind::NestingTooDeep: return "NestingTooDeep";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t position, const std::string& detail)
    : std::runtime_error(fmt::format("{} at offset {}: {}", to_string(kind), position, detail)),
      kind_(kind),
      position_(position) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool is_delimiter(char c) { return is_space(c) || c == '(' || c == ')' || c == '{' || c == '}' || c == '"'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RawNode parse_document() {
    skip_trivia();
    if (at_end()) throw ParseError(ParseErrorKind::EmptyInput, 0, "no form found");
    RawNode root = parse_form(0);
    skip_trivia();
    if (!at_end()) {
      throw ParseError(ParseErrorKind::TrailingContent, pos_, "only one top-level form is allowed");
    }
    return root;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (is_space(c)) {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  RawNode parse_form(std::size_t depth) {
    if (depth >= kMaxNesting) {
      throw ParseError(ParseErrorKind::NestingTooDeep, pos_, fmt::format("more than {} nested brackets", kMaxNesting));
    }
    char c = peek();
    if (c == '(') return parse_call(depth);
    if (c == '{') return parse_collection(depth);
    if (c == '"') return parse_string();
    if (c == ')' || c == '}') throw ParseError(ParseErrorKind::UnbalancedParen, pos_, fmt::format("unexpected '{}'", c));
    return parse_atom();
  }

  RawNode parse_call(std::size_t depth) {
    const std::size_t open = pos_++;
    skip_trivia();
    if (at_end()) throw ParseError(ParseErrorKind::UnbalancedParen, open, "'(' is never closed");
    if (is_delimiter(peek())) {
      if (peek() == ')') throw ParseError(ParseErrorKind::MissingHead, open, "empty call '()'");
      throw ParseError(ParseErrorKind::MissingHead, pos_, "a call must start with a symbol");
    }
    RawNode head = parse_atom();
    if (head.kind != NodeKind::Symbol) throw ParseError(ParseErrorKind::MissingHead, head.span.begin, "call head is a number");
    std::vector<RawNode> args = parse_items(depth, open, ')');
    RawNode node = RawNode::call(std::move(head.text), std::move(args), Span{open, pos_});
    node.head_span = head.span;
    return node;
  }

  RawNode parse_collection(std::size_t depth) {
    const std::size_t open = pos_++;
    std::vector<RawNode> items = parse_items(depth, open, '}');
    return RawNode::collection(std::move(items), Span{open, pos_});
  }

  // Reads items up to and including `close`.
  std::vector<RawNode> parse_items(std::size_t depth, std::size_t open, char close) {
    std::vector<RawNode> items;
    for (;;) {
      skip_trivia();
      if (at_end()) {
        throw ParseError(ParseErrorKind::UnbalancedParen, open, fmt::format("'{}' is never closed", text_[open]));
      }
      char c = peek();
      if (c == close) {
        ++pos_;
        return items;
      }
      if (c == ')' || c == '}') {
        throw ParseError(ParseErrorKind::UnbalancedParen, pos_,
                         fmt::format("'{}' does not match '{}' at offset {}", c, text_[open], open));
      }
      items.push_back(parse_form(depth + 1));
    }
  }

  RawNode parse_string() {
    const std::size_t open = pos_++;
    std::string value;
    while (!at_end()) {
      char c = text_[pos_++];
      if (c == '"') return RawNode::string(std::move(value), Span{open, pos_});
      if (c == '\\' && !at_end() && (peek() == '"' || peek() == '\\')) {
        value += text_[pos_++];
        continue;
      }
      value += c;
    }
    throw ParseError(ParseErrorKind::UnterminatedString, open, "string is never closed");
  }

  RawNode parse_atom() {
    const std::size_t start = pos_;
    while (!at_end() && !is_delimiter(peek())) ++pos_;
    std::string_view token = text_.substr(start, pos_ - start);
    Span span{start, pos_};
    std::size_t digits_from = (!token.empty() && token[0] == '-') ? 1 : 0;
    bool numeric = token.size() > digits_from;
    for (std::size_t i = digits_from; i < token.size() && numeric; ++i) numeric = token[i] >= '0' && token[i] <= '9';
    if (numeric) {
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec == std::errc() && ptr == token.data() + token.size()) return RawNode::integer(value, span);
    }
    return RawNode::symbol(std::string(token), span);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_to(const RawNode& node, std::string& out) {
  switch (node.kind) {
    case NodeKind::Symbol:
      out += node.text;
      break;
    case NodeKind::Number:
      out += std::to_string(node.number);
      break;
    case NodeKind::Text:
      out += '"';
      for (char c : node.text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += '"';
      break;
    case NodeKind::Call:
      out += '(';
      out += node.text;
      for (const auto& child : node.children) {
        out += ' ';
        print_to(child, out);
      }
      out += ')';
      break;
    case NodeKind::Collection:
      out += '{';
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) out += ' ';
        print_to(node.children[i], out);
      }
      out += '}';
      break;
  }
}

}  // namespace

RawNode parse(std::string_view text) { return Parser(text).parse_document(); }

std::string print_canonical(const RawNode& node) {
  std::string out;
  print_to(node, out);
  return out;
}

LineCol line_col(std::string_view text, std::size_t offset) {
  LineCol lc;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++lc.line;
      lc.column = 1;
    } else {
      ++lc.column;
    }
  }
  return lc;
}

}  // namespace ludman
