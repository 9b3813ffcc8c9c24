#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "listaccess/symbol.hpp"

namespace listaccess {

// The self-organizing list: an ordered sequence of pairwise distinct symbols.
// Every positional interface is 1-based.
class ListConfiguration {
 public:
  // Throws EmptyList when `items` is empty and DuplicateSymbol on repeats.
  explicit ListConfiguration(std::vector<Symbol> items);

  // One symbol per character, e.g. "123".
  static ListConfiguration from_chars(std::string_view text);

  std::size_t size() const { return items_.size(); }
  std::span<const Symbol> items() const { return items_; }

  // Throws PositionOutOfRange unless 1 <= position <= size().
  Symbol at(std::size_t position) const;

  // Linear scan from the front. Throws SymbolNotInList.
  std::size_t find_position(Symbol s) const;
  bool contains(Symbol s) const;

  // Free exchange: the element at `position` becomes the head, everything
  // else keeps its relative order.
  void move_to_front(std::size_t position);

  // Swaps the adjacent elements at `position` and `position + 1`.
  // Requires 1 <= position <= size() - 1. Returns the exchange cost (always 1).
  std::size_t paid_exchange(std::size_t position);

  std::string to_string() const;

  friend bool operator==(const ListConfiguration&, const ListConfiguration&) = default;

 private:
  std::vector<Symbol> items_;
};

}  // namespace listaccess
