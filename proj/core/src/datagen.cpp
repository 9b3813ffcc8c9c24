#include "listaccess/datagen.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_map>

#include "listaccess/errors.hpp"

namespace listaccess {
namespace {

// 26 + 26 + 10 letters and digits, then the first 30 printable ASCII
// punctuation characters ('!' through '|').
constexpr std::string_view kAlphaSpecial =
    "abcdefghijklmnopqrstuvwxyz"
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    "0123456789"
    "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|";
static_assert(kAlphaSpecial.size() == 92);

constexpr std::string_view kDigits = "0123456789ABCDEF";

// Unbiased draw from [0, bound) by rejection. Only the raw engine output is
// used, which the standard pins down exactly, so sequences match across
// standard library implementations (unlike std::uniform_int_distribution).
std::uint64_t draw_below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() - bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = engine();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace

Family Family::numeric(int base) {
  if (base != 2 && base != 8 && base != 10 && base != 16) {
    throw InvalidSpec("numeric base must be 2, 8, 10 or 16, got " + std::to_string(base));
  }
  return Family{Kind::Numeric, base};
}

std::string_view Family::alphabet() const {
  if (kind_ == Kind::AlphaSpecial) return kAlphaSpecial;
  return kDigits.substr(0, static_cast<std::size_t>(base_));
}

std::string Family::label() const {
  if (kind_ == Kind::AlphaSpecial) return "alpha";
  return "base" + std::to_string(base_);
}

Family Family::parse(std::string_view text) {
  if (text == "alpha") return alpha_special();
  for (std::string_view prefix : {std::string_view{"base"}, std::string_view{"numeric"}}) {
    if (text.substr(0, prefix.size()) == prefix) {
      const std::string digits(text.substr(prefix.size()));
      if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
        try {
          return numeric(std::stoi(digits));
        } catch (const InvalidSpec& e) {
          throw ParseError(e.what());
        }
      }
    }
  }
  throw ParseError("unknown dataset family '" + std::string(text) + "'");
}

RequestSequence gen_sequence(const GenSpec& spec) {
  if (spec.n == 0) throw InvalidSpec("sequence length must be at least 1");
  const std::string_view alphabet = spec.family.alphabet();
  std::mt19937_64 engine(spec.seed);
  std::vector<Symbol> requests;
  requests.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    requests.push_back(Symbol::from_char(alphabet[draw_below(engine, alphabet.size())]));
  }
  return RequestSequence(std::move(requests));
}

ListConfiguration build_list(const RequestSequence& seq) {
  if (seq.empty()) throw EmptySequence("cannot build a list from an empty request sequence");
  std::vector<Symbol> distinct;
  for (Symbol s : seq) {
    if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);
  }
  return ListConfiguration(std::move(distinct));
}

LocalityStats locality_stats(const RequestSequence& seq) {
  if (seq.empty()) throw EmptySequence("locality statistics need a non-empty sequence");
  LocalityStats stats;
  stats.length = seq.size();
  std::unordered_map<Symbol, std::size_t> slot;
  // Most recently used first; the index of a symbol here is the number of
  // distinct symbols requested since its last reference.
  std::vector<Symbol> recency;
  double distance_sum = 0.0;
  for (Symbol s : seq) {
    auto [it, inserted] = slot.try_emplace(s, stats.frequencies.size());
    if (inserted) {
      stats.frequencies.emplace_back(s, 1);
      recency.insert(recency.begin(), s);
      continue;
    }
    ++stats.frequencies[it->second].second;
    auto where = std::find(recency.begin(), recency.end(), s);
    distance_sum += static_cast<double>(where - recency.begin());
    ++stats.reuse_count;
    std::rotate(recency.begin(), where, where + 1);
  }
  stats.distinct = stats.frequencies.size();
  if (stats.reuse_count > 0) stats.mean_reuse_distance = distance_sum / static_cast<double>(stats.reuse_count);
  return stats;
}

ParsedSequence parse_sequence(std::string_view text, const Family& family) {
  const std::string_view alphabet = family.alphabet();
  const bool numeric = family.kind() == Family::Kind::Numeric;
  ParsedSequence parsed;
  std::vector<Symbol> requests;
  requests.reserve(text.size());
  for (char c : text) {
    if (c == '\n' || c == '\r') continue;
    if (numeric) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (alphabet.find(c) == std::string_view::npos) {
      ++parsed.skipped;
      continue;
    }
    requests.push_back(Symbol::from_char(c));
  }
  parsed.sequence = RequestSequence(std::move(requests));
  return parsed;
}

ParsedSequence load_sequence_file(const std::filesystem::path& path, const Family& family) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open sequence file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading sequence file " + path.string());
  return parse_sequence(buffer.str(), family);
}

std::string format_sequence(const RequestSequence& seq) {
  std::string out;
  out.reserve(seq.size() + 1);
  for (Symbol s : seq) {
    if (!is_char_symbol(s) || s.code == ' ') {
      throw InvalidSpec("symbol " + to_string(s) + " has no single-character text form");
    }
    out += static_cast<char>(s.code);
  }
  out += '\n';
  return out;
}

void write_sequence_file(const std::filesystem::path& path, const RequestSequence& seq) {
  const std::string text = format_sequence(seq);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace listaccess
