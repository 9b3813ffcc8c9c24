#include "listaccess/symbol.hpp"

namespace listaccess {

bool is_char_symbol(Symbol s) { return s.code >= 0x20 && s.code < 0x7f; }

std::string to_string(Symbol s) {
  if (is_char_symbol(s)) return std::string(1, static_cast<char>(s.code));
  return "#" + std::to_string(s.code);
}

std::vector<Symbol> symbols_from_chars(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(Symbol::from_char(c));
  return out;
}

}  // namespace listaccess
