// Template-based English rendering of compiled games.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ludman/game_spec.hpp"

namespace ludman {

enum class TextSection { Header, Equipment, PieceRules, Setup, Rules, Aim };

struct TranslationContext {
  TextSection section = TextSection::Rules;
  /// Plural piece name used as the subject of per-piece rules ("Queens slide ...").
  std::optional<std::string> subject;
};

/// Raised for a ludeme without a translation template.
class TranslationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Whole document, one entry per line, no trailing newlines.
std::vector<std::string> translate_lines(const GameSpec& spec);

/// translate_lines joined with '\n', ending in a newline.
std::string translate_game(const GameSpec& spec);

/// Text fragment for one ludeme. Move and condition fragments start lower case
/// and carry no final full stop.
std::string translate_node(LudemeId id, const TranslationContext& context, const GameSpec& spec);

/// Sentence for the rule a move came from, e.g. "Add one of your pieces to the set of empty cells."
/// Rules declared inside a piece use the plural piece name as subject.
std::string rule_sentence(LudemeId move_rule, const GameSpec& spec);

/// Sentence for an end rule, e.g. "If the next player cannot move, the moving player wins."
/// kNoLudeme gives the sentence for the no-legal-moves draw.
std::string ending_sentence(LudemeId end_rule, const GameSpec& spec);

/// True when translate_node has a template for the registry descriptor id.
bool has_template(std::string_view descriptor);

/// "A, B and C"; "A"; "".
std::string join_list(const std::vector<std::string>& items);

/// Words for 0..12, digits otherwise.
std::string number_word(long long n);

/// "player one", "player two", ...
std::string player_name(int player);

std::string pluralise(std::string_view noun);

/// Collapses runs of spaces and trims line ends; used for golden comparisons.
std::string normalise_whitespace(std::string_view text);

}  // namespace ludman
