#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "listaccess/list_configuration.hpp"
#include "listaccess/request_sequence.hpp"

namespace listaccess {

// A dataset family: the 92-symbol keyboard alphabet (letters, digits and 30
// punctuation marks) or the digits of one of the bases 2, 8, 10 and 16.
class Family {
 public:
  enum class Kind { AlphaSpecial, Numeric };

  static Family alpha_special() { return Family{Kind::AlphaSpecial, 0}; }
  // Throws InvalidSpec for bases other than 2, 8, 10, 16.
  static Family numeric(int base);

  Kind kind() const { return kind_; }
  int base() const { return base_; }

  // Every symbol of the alphabet, one character each, in canonical order.
  std::string_view alphabet() const;
  std::size_t alphabet_size() const { return alphabet().size(); }

  // "alpha", "base2", "base8", "base10" or "base16".
  std::string label() const;

  // Inverse of label(); also accepts "numeric<base>". Throws ParseError.
  static Family parse(std::string_view text);

  friend bool operator==(const Family&, const Family&) = default;

 private:
  Family(Kind kind, int base) : kind_(kind), base_(base) {}

  Kind kind_;
  int base_;
};

struct GenSpec {
  Family family = Family::alpha_special();
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

// Uniform i.i.d. draws from the family's alphabet. A pure function of
// (family, n, seed) on every platform. Throws InvalidSpec when n == 0.
RequestSequence gen_sequence(const GenSpec& spec);

// The distinct symbols of `seq` in order of first occurrence.
// Throws EmptySequence.
ListConfiguration build_list(const RequestSequence& seq);

struct LocalityStats {
  std::size_t length = 0;
  std::size_t distinct = 0;
  // Per-symbol request counts, in order of first occurrence.
  std::vector<std::pair<Symbol, std::size_t>> frequencies;
  // Number of requests that re-reference an earlier symbol.
  std::size_t reuse_count = 0;
  // Mean number of distinct symbols requested between consecutive references
  // to the same symbol; empty when nothing is re-referenced.
  std::optional<double> mean_reuse_distance;
};

// Throws EmptySequence.
LocalityStats locality_stats(const RequestSequence& seq);

struct ParsedSequence {
  RequestSequence sequence;
  // Characters outside the family's alphabet (line breaks are not counted).
  std::size_t skipped = 0;
};

// Sequence text format: one request per character, line breaks ignored.
// Numeric families accept hex digits in either case and store them upper case.
ParsedSequence parse_sequence(std::string_view text, const Family& family);

// Throws IoError when the file cannot be read.
ParsedSequence load_sequence_file(const std::filesystem::path& path, const Family& family);

// One character per request followed by a single newline. Throws InvalidSpec
// when a symbol is not a printable character.
std::string format_sequence(const RequestSequence& seq);

void write_sequence_file(const std::filesystem::path& path, const RequestSequence& seq);

}  // namespace listaccess
