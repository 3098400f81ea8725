// The supported ludeme subset, loaded from a machine-readable table.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ludman {

enum class SlotKind { Int, String, Symbol, Ludeme };
enum class CollectionMode { Never, Maybe, Always };

/// One positional parameter of a ludeme.
///
/// Symbol slots list the accepted symbols in `values`; the entries "P#"
/// (any player symbol P1, P2, ...) and "<direction>" (any direction name)
/// stand for value classes. Ludeme slots list the descriptor ids or
/// categories they accept.
struct Slot {
  std::string name;
  SlotKind kind = SlotKind::Int;
  std::vector<std::string> values;
  std::vector<std::string> accepts;
  CollectionMode collection = CollectionMode::Never;
  bool optional = false;
  bool repeat = false;
};

struct LudemeDescriptor {
  std::string id;        // unique, e.g. "move.Add"
  std::string head;      // call head, e.g. "move"
  std::string selector;  // leading symbol argument, e.g. "Add"; may be empty
  std::string category;
  std::vector<Slot> slots;

  /// Head and selector as they appear in source, e.g. "move Add".
  std::string display_name() const;
};

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Registry {
 public:
  /// Parses and validates a registry table. Throws RegistryError.
  static Registry from_json(std::string_view json_text);

  /// The table compiled into the library from data/ludemes.json.
  static const Registry& builtin();

  const std::vector<LudemeDescriptor>& descriptors() const { return descriptors_; }
  const std::vector<std::string>& categories() const { return categories_; }
  const std::vector<std::string>& direction_names() const { return direction_names_; }

  const LudemeDescriptor* find(std::string_view id) const;
  std::vector<const LudemeDescriptor*> with_head(std::string_view head) const;
  bool has_head(std::string_view head) const;

  /// True for names known from the full language but outside this subset,
  /// given either as a bare head ("mode") or head plus selector ("move Pass").
  bool is_unsupported(std::string_view name) const;

  bool slot_accepts(const Slot& slot, const LudemeDescriptor& descriptor) const;
  bool symbol_allowed(const Slot& slot, std::string_view symbol) const;

 private:
  std::vector<std::string> categories_;
  std::vector<std::string> unsupported_;
  std::vector<std::string> direction_names_;
  std::vector<LudemeDescriptor> descriptors_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

/// Parses "P3" into 3; returns 0 for anything else.
int player_symbol_index(std::string_view symbol);

}  // namespace ludman
