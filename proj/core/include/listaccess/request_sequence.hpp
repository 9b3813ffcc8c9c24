#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "listaccess/list_configuration.hpp"
#include "listaccess/symbol.hpp"

namespace listaccess {

// The requests to serve, in order. Indices are 1-based; an empty sequence is
// a valid (zero-cost) input.
class RequestSequence {
 public:
  RequestSequence() = default;
  explicit RequestSequence(std::vector<Symbol> requests) : requests_(std::move(requests)) {}

  static RequestSequence from_chars(std::string_view text);

  std::size_t size() const { return requests_.size(); }
  bool empty() const { return requests_.empty(); }
  std::span<const Symbol> items() const { return requests_; }
  auto begin() const { return requests_.begin(); }
  auto end() const { return requests_.end(); }

  // Throws PositionOutOfRange unless 1 <= index <= size().
  Symbol at(std::size_t index) const;

  // Throws SymbolNotInList naming the first request absent from `list`.
  void validate_against(const ListConfiguration& list) const;

  std::string to_string() const;

  friend bool operator==(const RequestSequence&, const RequestSequence&) = default;

 private:
  std::vector<Symbol> requests_;
};

}  // namespace listaccess
