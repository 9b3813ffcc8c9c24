#include "listaccess/request_sequence.hpp"

#include "listaccess/errors.hpp"

namespace listaccess {

RequestSequence RequestSequence::from_chars(std::string_view text) {
  return RequestSequence(symbols_from_chars(text));
}

Symbol RequestSequence::at(std::size_t index) const {
  if (index < 1 || index > requests_.size()) {
    throw PositionOutOfRange("request index " + std::to_string(index) + " outside sequence of length " +
                             std::to_string(requests_.size()));
  }
  return requests_[index - 1];
}

void RequestSequence::validate_against(const ListConfiguration& list) const {
  for (std::size_t i = 0; i < requests_.size(); ++i) {
    if (!list.contains(requests_[i])) {
      throw SymbolNotInList("request " + std::to_string(i + 1) + " (" + listaccess::to_string(requests_[i]) +
                            ") is not in the list");
    }
  }
}

std::string RequestSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < requests_.size(); ++i) {
    if (i) out += ' ';
    out += listaccess::to_string(requests_[i]);
  }
  return out;
}

}  // namespace listaccess
