#include "ludman/registry.hpp"

#include <algorithm>
#include <charconv>
#include <nlohmann/json.hpp>
#include <set>

namespace ludman {

extern const char* const kBuiltinRegistryJson;

namespace {

using nlohmann::json;

constexpr std::string_view kPlayerClass = "P#";
constexpr std::string_view kDirectionClass = "<direction>";

SlotKind parse_kind(const std::string& text) {
  if (text == "int") return SlotKind::Int;
  if (text == "string") return SlotKind::String;
  if (text == "symbol") return SlotKind::Symbol;
  if (text == "ludeme") return SlotKind::Ludeme;
  throw RegistryError("unknown slot kind '" + text + "'");
}

CollectionMode parse_collection(const std::string& text) {
  if (text == "never") return CollectionMode::Never;
  if (text == "maybe") return CollectionMode::Maybe;
  if (text == "always") return CollectionMode::Always;
  throw RegistryError("unknown collection mode '" + text + "'");
}

}  // namespace

std::string LudemeDescriptor::display_name() const { return selector.empty() ? head : head + " " + selector; }

int player_symbol_index(std::string_view symbol) {
  if (symbol.size() < 2 || symbol[0] != 'P') return 0;
  int value = 0;
  auto [ptr, ec] = std::from_chars(symbol.data() + 1, symbol.data() + symbol.size(), value);
  if (ec != std::errc() || ptr != symbol.data() + symbol.size() || value < 1) return 0;
  return value;
}

Registry Registry::from_json(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw RegistryError(std::string("registry is not valid JSON: ") + e.what());
  }

  Registry reg;
  try {
    reg.categories_ = doc.at("categories").get<std::vector<std::string>>();
    reg.unsupported_ = doc.value("unsupported", std::vector<std::string>{});
    reg.direction_names_ = doc.at("value_classes").at(std::string(kDirectionClass)).get<std::vector<std::string>>();
    for (const auto& entry : doc.at("ludemes")) {
      LudemeDescriptor d;
      d.id = entry.at("id").get<std::string>();
      d.head = entry.at("head").get<std::string>();
      d.selector = entry.value("selector", "");
      d.category = entry.at("category").get<std::string>();
      for (const auto& s : entry.at("slots")) {
        Slot slot;
        slot.name = s.at("name").get<std::string>();
        slot.kind = parse_kind(s.at("kind").get<std::string>());
        slot.values = s.value("values", std::vector<std::string>{});
        slot.accepts = s.value("accepts", std::vector<std::string>{});
        slot.collection = parse_collection(s.value("collection", "never"));
        slot.optional = s.value("optional", false);
        slot.repeat = s.value("repeat", false);
        d.slots.push_back(std::move(slot));
      }
      reg.descriptors_.push_back(std::move(d));
    }
  } catch (const json::exception& e) {
    throw RegistryError(std::string("malformed registry entry: ") + e.what());
  }

  std::set<std::string> categories(reg.categories_.begin(), reg.categories_.end());
  for (std::size_t i = 0; i < reg.descriptors_.size(); ++i) {
    const auto& d = reg.descriptors_[i];
    if (!reg.by_id_.emplace(d.id, i).second) throw RegistryError("duplicate ludeme id '" + d.id + "'");
    if (!categories.count(d.category)) {
      throw RegistryError("ludeme '" + d.id + "' has unknown category '" + d.category + "'");
    }
  }
  for (const auto& d : reg.descriptors_) {
    for (const auto& slot : d.slots) {
      if (slot.kind == SlotKind::Ludeme && slot.accepts.empty()) {
        throw RegistryError("slot '" + slot.name + "' of '" + d.id + "' accepts nothing");
      }
      for (const auto& target : slot.accepts) {
        if (!categories.count(target) && !reg.by_id_.count(target)) {
          throw RegistryError("slot '" + slot.name + "' of '" + d.id + "' references unknown '" + target + "'");
        }
      }
    }
  }
  return reg;
}

const Registry& Registry::builtin() {
  static const Registry reg = from_json(kBuiltinRegistryJson);
  return reg;
}

const LudemeDescriptor* Registry::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &descriptors_[it->second];
}

std::vector<const LudemeDescriptor*> Registry::with_head(std::string_view head) const {
  std::vector<const LudemeDescriptor*> out;
  for (const auto& d : descriptors_) {
    if (d.head == head) out.push_back(&d);
  }
  return out;
}

bool Registry::has_head(std::string_view head) const {
  return std::any_of(descriptors_.begin(), descriptors_.end(), [&](const auto& d) { return d.head == head; });
}

bool Registry::is_unsupported(std::string_view name) const {
  return std::find(unsupported_.begin(), unsupported_.end(), name) != unsupported_.end();
}

bool Registry::slot_accepts(const Slot& slot, const LudemeDescriptor& descriptor) const {
  return std::any_of(slot.accepts.begin(), slot.accepts.end(),
                     [&](const std::string& a) { return a == descriptor.id || a == descriptor.category; });
}

bool Registry::symbol_allowed(const Slot& slot, std::string_view symbol) const {
  for (const auto& v : slot.values) {
    if (v == symbol) return true;
    if (v == kPlayerClass && player_symbol_index(symbol) > 0) return true;
    if (v == kDirectionClass &&
        std::find(direction_names_.begin(), direction_names_.end(), symbol) != direction_names_.end()) {
      return true;
    }
  }
  return false;
}

}  // namespace ludman
