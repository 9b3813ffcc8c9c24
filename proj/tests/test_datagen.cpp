#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "listaccess/datagen.hpp"
#include "listaccess/errors.hpp"

using namespace listaccess;

namespace {

RequestSequence R(std::string_view s) { return RequestSequence::from_chars(s); }

bool within(const RequestSequence& seq, std::string_view alphabet) {
  return std::all_of(seq.begin(), seq.end(),
                     [&](Symbol s) { return alphabet.find(static_cast<char>(s.code)) != std::string_view::npos; });
}

}  // namespace

TEST_CASE("alphabets") {
  const auto alpha = Family::alpha_special().alphabet();
  CHECK(alpha.size() == 92);
  CHECK(std::set<char>(alpha.begin(), alpha.end()).size() == 92);
  for (char c = 'a'; c <= 'z'; ++c) CHECK(alpha.find(c) != std::string_view::npos);
  for (char c = 'A'; c <= 'Z'; ++c) CHECK(alpha.find(c) != std::string_view::npos);
  for (char c = '0'; c <= '9'; ++c) CHECK(alpha.find(c) != std::string_view::npos);
  CHECK(std::count_if(alpha.begin(), alpha.end(), [](unsigned char c) { return std::ispunct(c); }) == 30);

  CHECK(Family::numeric(2).alphabet() == "01");
  CHECK(Family::numeric(8).alphabet() == "01234567");
  CHECK(Family::numeric(10).alphabet() == "0123456789");
  CHECK(Family::numeric(16).alphabet() == "0123456789ABCDEF");
  CHECK_THROWS_AS(Family::numeric(3), InvalidSpec);
}

TEST_CASE("family labels round-trip") {
  for (const Family& f : {Family::alpha_special(), Family::numeric(2), Family::numeric(8), Family::numeric(10),
                          Family::numeric(16)}) {
    CHECK(Family::parse(f.label()) == f);
  }
  CHECK(Family::parse("numeric16") == Family::numeric(16));
  CHECK_THROWS_AS(Family::parse("base3"), ParseError);
  CHECK_THROWS_AS(Family::parse("greek"), ParseError);
}

TEST_CASE("gen_sequence") {
  const auto alpha = gen_sequence({Family::alpha_special(), 100, 1});
  CHECK(alpha.size() == 100);
  CHECK(within(alpha, Family::alpha_special().alphabet()));

  const auto bits = gen_sequence({Family::numeric(2), 50, 7});
  CHECK(bits.size() == 50);
  CHECK(within(bits, "01"));

  CHECK(gen_sequence({Family::numeric(16), 300, 9}) == gen_sequence({Family::numeric(16), 300, 9}));
  CHECK(gen_sequence({Family::numeric(16), 300, 9}) != gen_sequence({Family::numeric(16), 300, 10}));
  CHECK_THROWS_AS(gen_sequence({Family::numeric(2), 0, 1}), InvalidSpec);
}

TEST_CASE("gen_sequence is pinned to the engine output") {
  // Expected prefixes come from a separate MT19937-64 implementation (checked
  // against the standard's 10000th-output value) with the same rejection rule.
  CHECK(format_sequence(gen_sequence({Family::numeric(16), 24, 12345})) == "A9D2458C59E81CA4B43E79B9\n");
  CHECK(format_sequence(gen_sequence({Family::alpha_special(), 24, 1})) == "KYUoi,[jG=e^TV',Dk^u|h0@\n");
  // Longer requests extend the same stream.
  const auto seq = gen_sequence({Family::numeric(16), 24, 12345});
  const auto longer = gen_sequence({Family::numeric(16), 48, 12345});
  CHECK(std::equal(seq.begin(), seq.end(), longer.begin()));
}

TEST_CASE("gen_sequence is roughly uniform") {
  const auto seq = gen_sequence({Family::numeric(8), 80000, 3});
  const auto stats = locality_stats(seq);
  CHECK(stats.distinct == 8);
  for (const auto& [symbol, count] : stats.frequencies) {
    CHECK(count > 9500);
    CHECK(count < 10500);
  }
}

TEST_CASE("build_list") {
  CHECK(build_list(R("32132")) == ListConfiguration::from_chars("321"));
  CHECK(build_list(R("aaa")) == ListConfiguration::from_chars("a"));
  CHECK_THROWS_AS(build_list(R("")), EmptySequence);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto seq = gen_sequence({Family::alpha_special(), 100, seed});
    const auto list = build_list(seq);
    CHECK(list.size() <= 92);
    for (Symbol s : seq) CHECK(list.contains(s));
    for (int base : {2, 8, 10, 16}) {
      CHECK(build_list(gen_sequence({Family::numeric(base), 60, seed})).size() <= static_cast<std::size_t>(base));
    }
  }
}

TEST_CASE("locality_stats") {
  const auto ones = locality_stats(R("111"));
  CHECK(ones.distinct == 1);
  CHECK(ones.reuse_count == 2);
  REQUIRE(ones.mean_reuse_distance.has_value());
  CHECK(*ones.mean_reuse_distance == 0.0);

  const auto pairs = locality_stats(R("1212"));
  CHECK(pairs.distinct == 2);
  REQUIRE(pairs.frequencies.size() == 2);
  CHECK(pairs.frequencies[0].second == 2);
  CHECK(pairs.frequencies[1].second == 2);
  CHECK(*pairs.mean_reuse_distance == 1.0);

  // Distinct symbols in between, not raw gap: "1 2 2 2 1" reuses 1 after one symbol.
  CHECK(*locality_stats(R("12221")).mean_reuse_distance == doctest::Approx((0.0 + 0.0 + 1.0) / 3.0));

  CHECK_FALSE(locality_stats(R("123")).mean_reuse_distance.has_value());
  CHECK(locality_stats(gen_sequence({Family::alpha_special(), 1000, 1})).distinct <= 92);
  CHECK_THROWS_AS(locality_stats(R("")), EmptySequence);
}

TEST_CASE("sequence text format") {
  const auto alpha = parse_sequence("ab\ncd\r\n e", Family::alpha_special());
  CHECK(alpha.sequence == R("abcde"));
  CHECK(alpha.skipped == 1);  // the space

  const auto hex = parse_sequence("0aF9\nz", Family::numeric(16));
  CHECK(hex.sequence == R("0AF9"));
  CHECK(hex.skipped == 1);

  const auto octal = parse_sequence("0789", Family::numeric(8));
  CHECK(octal.sequence == R("07"));
  CHECK(octal.skipped == 2);

  CHECK(format_sequence(R("0AF9")) == "0AF9\n");
  CHECK_THROWS_AS(format_sequence(RequestSequence({Symbol{1}})), InvalidSpec);
}

TEST_CASE("sequence files round-trip") {
  const auto dir = std::filesystem::temp_directory_path() / "listaccess_datagen_test";
  std::filesystem::create_directories(dir);
  for (const Family& f : {Family::alpha_special(), Family::numeric(2), Family::numeric(16)}) {
    const auto seq = gen_sequence({f, 500, 77});
    const auto path = dir / (f.label() + ".txt");
    write_sequence_file(path, seq);
    const auto loaded = load_sequence_file(path, f);
    CHECK(loaded.sequence == seq);
    CHECK(loaded.skipped == 0);
  }
  CHECK_THROWS_AS(load_sequence_file(dir / "missing.txt", Family::alpha_special()), IoError);
  std::filesystem::remove_all(dir);
}
