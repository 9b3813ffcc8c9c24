#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace listaccess {

// An opaque token from a run's alphabet. Text-backed datasets store the
// character code; synthetic tests may use any integer.
struct Symbol {
  std::uint32_t code{};

  constexpr Symbol() = default;
  constexpr explicit Symbol(std::uint32_t c) : code(c) {}

  static constexpr Symbol from_char(char c) { return Symbol{static_cast<unsigned char>(c)}; }

  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

// Printable ASCII renders as the character itself, anything else as `#<code>`.
std::string to_string(Symbol s);

// Printable ASCII (space through tilde).
bool is_char_symbol(Symbol s);

std::vector<Symbol> symbols_from_chars(std::string_view text);

}  // namespace listaccess

template <>
struct std::hash<listaccess::Symbol> {
  std::size_t operator()(listaccess::Symbol s) const noexcept { return std::hash<std::uint32_t>{}(s.code); }
};
