#include "listaccess/list_configuration.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "listaccess/errors.hpp"

namespace listaccess {

ListConfiguration::ListConfiguration(std::vector<Symbol> items) : items_(std::move(items)) {
  if (items_.empty()) throw EmptyList("list configuration must hold at least one symbol");
  std::unordered_set<Symbol> seen;
  seen.reserve(items_.size());
  for (Symbol s : items_) {
    if (!seen.insert(s).second) throw DuplicateSymbol("duplicate symbol in list: " + listaccess::to_string(s));
  }
}

ListConfiguration ListConfiguration::from_chars(std::string_view text) {
  return ListConfiguration(symbols_from_chars(text));
}

Symbol ListConfiguration::at(std::size_t position) const {
  if (position < 1 || position > items_.size()) {
    throw PositionOutOfRange("position " + std::to_string(position) + " outside list of size " +
                             std::to_string(items_.size()));
  }
  return items_[position - 1];
}

std::size_t ListConfiguration::find_position(Symbol s) const {
  auto it = std::find(items_.begin(), items_.end(), s);
  if (it == items_.end()) throw SymbolNotInList("symbol not in list: " + listaccess::to_string(s));
  return static_cast<std::size_t>(it - items_.begin()) + 1;
}

bool ListConfiguration::contains(Symbol s) const {
  return std::find(items_.begin(), items_.end(), s) != items_.end();
}

void ListConfiguration::move_to_front(std::size_t position) {
  at(position);
  auto first = items_.begin();
  std::rotate(first, first + static_cast<std::ptrdiff_t>(position - 1), first + static_cast<std::ptrdiff_t>(position));
}

std::size_t ListConfiguration::paid_exchange(std::size_t position) {
  if (position < 1 || position >= items_.size()) {
    throw PositionOutOfRange("paid exchange at " + std::to_string(position) + " needs 1 <= position < " +
                             std::to_string(items_.size()));
  }
  std::swap(items_[position - 1], items_[position]);
  return 1;
}

std::string ListConfiguration::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ' ';
    out += listaccess::to_string(items_[i]);
  }
  return out;
}

}  // namespace listaccess
