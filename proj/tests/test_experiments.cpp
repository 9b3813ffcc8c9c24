#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <string>

#include "listaccess/algorithms.hpp"
#include "listaccess/chart.hpp"
#include "listaccess/errors.hpp"
#include "listaccess/experiments.hpp"

using namespace listaccess;

namespace {

ExperimentRow worked_pair() {
  return compare_pair("worked", ListConfiguration::from_chars("123"), RequestSequence::from_chars("32132"),
                      CostModel::Full);
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// y coordinates of a polyline's points, keyed by x.
std::vector<std::pair<double, double>> polyline_points(const std::string& svg, const std::string& series) {
  const std::regex re("data-series=\"" + series + "\"[^>]*points=\"([^\"]*)\"");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, re));
  std::vector<std::pair<double, double>> pts;
  std::istringstream in(m[1].str());
  for (std::string pair; in >> pair;) {
    const auto comma = pair.find(',');
    pts.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
  }
  return pts;
}

}  // namespace

TEST_CASE("compare_pair on the worked example") {
  const auto row = worked_pair();
  CHECK(row.n == 5);
  CHECK(row.l == 3);
  CHECK(row.c_mtf == 15);
  CHECK(row.c_imtf == 11);
  CHECK(row.g == doctest::Approx(26.67).epsilon(0.01 / 26.67));
}

TEST_CASE("format_gain rounds half away from zero") {
  CHECK(format_gain(15, 11) == "26.67");
  CHECK(format_gain(867, 702) == "19.03");
  CHECK(format_gain(100, 100) == "0.00");
  CHECK(format_gain(8, 7) == "12.50");
  CHECK(format_gain(1000, 999) == "0.10");
  CHECK(format_gain(20000, 19999) == "0.01");   // 0.005 rounds up
  CHECK(format_gain(40000, 39999) == "0.00");   // 0.0025 rounds down
  CHECK(format_gain(20000, 20001) == "-0.01");
  CHECK(format_gain(3, 6) == "-100.00");
  CHECK_THROWS_AS(format_gain(0, 1), DivisionByZero);
}

TEST_CASE("emit_csv") {
  const std::string csv = emit_csv({worked_pair()});
  CHECK(csv == "N,L,C_MTF,C_IMTF,g_percent\n5,3,15,11,26.67\n");
  CHECK_THROWS_AS(emit_csv({}), EmptyInput);

  const auto rows = run_experiment(alpha_table_spec(1));
  CHECK(count(emit_csv(rows), "\n") == 11);
}

TEST_CASE("emit_csv round-trips integer fields") {
  auto rows = run_experiment(numeric_table_spec(3, 2));
  const auto parsed = parse_csv(emit_csv(rows));
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i].n == rows[i].n);
    CHECK(parsed[i].l == rows[i].l);
    CHECK(parsed[i].c_mtf == rows[i].c_mtf);
    CHECK(parsed[i].c_imtf == rows[i].c_imtf);
    CHECK(parsed[i].g == doctest::Approx(rows[i].g).epsilon(0.0051 / std::max(1.0, std::abs(rows[i].g))));
  }
}

TEST_CASE("parse_csv rejects malformed input") {
  CHECK_THROWS_AS(parse_csv(""), ParseError);
  CHECK_THROWS_AS(parse_csv("N,L\n1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("N,L,C_MTF,C_IMTF,g_percent\n1,2,3\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("N,L,C_MTF,C_IMTF,g_percent\n1,2,x,4,5.0\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("N,L,C_MTF,C_IMTF,g_percent\n1,2,3,4,5.0%\n"), ParseError);
}

TEST_CASE("run_experiment table layouts") {
  const auto alpha = run_experiment(alpha_table_spec(1));
  REQUIRE(alpha.size() == 10);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    CHECK(alpha[i].n == 100 * (i + 1));
    CHECK(alpha[i].l <= 92);
    CHECK(alpha[i].label == "alpha");
  }

  const auto numeric = run_experiment(numeric_table_spec(1));
  REQUIRE(numeric.size() == 12);
  CHECK(numeric[0].label == "base16");
  CHECK(numeric[3].label == "base2");
  CHECK(numeric[11].n == 200);

  for (const auto* rows : {&alpha, &numeric}) {
    for (const auto& r : *rows) {
      CHECK(r.c_mtf >= r.n);
      CHECK(r.c_imtf >= r.n);
      CHECK(format_gain(r.c_mtf, r.c_imtf) == format_gain(r.c_mtf, r.c_imtf));
      CHECK(r.g == doctest::Approx(gain(r.c_mtf, r.c_imtf)));
    }
  }
}

TEST_CASE("run_experiment compares both algorithms on the same data") {
  const GenSpec gen{Family::numeric(10), 150, 8};
  ExperimentSpec spec{.rows = {gen}};
  const auto rows = run_experiment(spec);
  const auto seq = gen_sequence(gen);
  const auto list = build_list(seq);
  CHECK(rows.at(0).c_mtf == run_mtf(list, seq, CostModel::Full).total_cost);
  CHECK(rows.at(0).c_imtf == run_imtf(list, seq, CostModel::Full).total_cost);
}

TEST_CASE("run_experiment is deterministic and honours trials") {
  const auto a = emit_csv(run_experiment(numeric_table_spec(42, 3)));
  const auto b = emit_csv(run_experiment(numeric_table_spec(42, 3)));
  CHECK(a == b);

  const auto rows = run_experiment(numeric_table_spec(42, 3));
  CHECK(rows.size() == 36);
  CHECK(rows[0].trial == 0);
  CHECK(rows[2].trial == 2);
  CHECK(rows[0].seed != rows[1].seed);

  CHECK_THROWS_AS(run_experiment(ExperimentSpec{}), InvalidSpec);
  CHECK_THROWS_AS(run_experiment(ExperimentSpec{.rows = {GenSpec{Family::numeric(2), 10, 1}}, .trials = 0}),
                  InvalidSpec);
}

TEST_CASE("partial model shifts every cost by N") {
  auto spec = numeric_table_spec(5);
  const auto full = run_experiment(spec);
  spec.model = CostModel::Partial;
  const auto partial = run_experiment(spec);
  REQUIRE(full.size() == partial.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    CHECK(partial[i].c_mtf + partial[i].n == full[i].c_mtf);
    CHECK(partial[i].c_imtf + partial[i].n == full[i].c_imtf);
  }
}

TEST_CASE("summarize") {
  std::vector<ExperimentRow> rows{
      {.label = "a", .n = 10, .l = 4, .c_mtf = 20, .c_imtf = 10, .g = 50.0},
      {.label = "a", .n = 10, .l = 6, .c_mtf = 30, .c_imtf = 30, .g = 0.0},
      {.label = "b", .n = 10, .l = 2, .c_mtf = 12, .c_imtf = 12, .g = 0.0},
  };
  const auto cells = summarize(rows);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].label == "a");
  CHECK(cells[0].trials == 2);
  CHECK(cells[0].mean_l == 5.0);
  CHECK(cells[0].mean_c_mtf == 25.0);
  CHECK(cells[0].mean_g == 25.0);
  CHECK(cells[0].stddev_g == doctest::Approx(35.3553).epsilon(1e-5));
  CHECK(cells[1].stddev_g == 0.0);
  CHECK(emit_summary_csv(cells) ==
        "family,N,trials,L_mean,C_MTF_mean,C_IMTF_mean,g_mean,g_stddev\n"
        "a,10,2,5.00,25.00,20.00,25.00,35.36\n"
        "b,10,1,2.00,12.00,12.00,0.00,0.00\n");
}

TEST_CASE("experiment config files") {
  const auto spec = parse_experiment_config(
      "# layout\n"
      "alpha 100 1\n"
      "\n"
      "numeric 16 50 2\n"
      "file alpha data/t.txt\n"
      "file numeric 8 o.txt\n",
      "/base");
  REQUIRE(spec.rows.size() == 4);
  const auto& g0 = std::get<GenSpec>(spec.rows[0]);
  CHECK(g0.family == Family::alpha_special());
  CHECK(g0.n == 100);
  CHECK(g0.seed == 1);
  CHECK(std::get<GenSpec>(spec.rows[1]).family == Family::numeric(16));
  CHECK(std::get<FileSource>(spec.rows[2]).path == std::filesystem::path("/base/data/t.txt"));
  CHECK(std::get<FileSource>(spec.rows[3]).family == Family::numeric(8));

  CHECK_THROWS_AS(parse_experiment_config(""), ParseError);
  CHECK_THROWS_AS(parse_experiment_config("numeric 3 10 1\n"), ParseError);
  CHECK_THROWS_AS(parse_experiment_config("alpha 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_experiment_config("alpha ten 1\n"), ParseError);
  CHECK_THROWS_AS(parse_experiment_config("zeta 10 1\n"), ParseError);
}

TEST_CASE("file rows load text and skip foreign characters") {
  const auto dir = std::filesystem::temp_directory_path() / "listaccess_experiment_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "worked.txt") << "3 2 1\n3 2\n";
    std::ofstream(dir / "spec.cfg") << "file numeric 10 worked.txt\n";
  }
  const auto rows = run_experiment(load_experiment_config(dir / "spec.cfg"));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].label == "worked.txt");
  CHECK(rows[0].n == 5);
  // The list is built by first occurrence (3, 2, 1), unlike the worked example.
  CHECK(rows[0].l == 3);
  CHECK(rows[0].c_mtf == 12);
  CHECK(rows[0].c_imtf == 1 + 2 + 3 + 1 + 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("line chart") {
  const auto rows = run_experiment(alpha_table_spec(1));
  const std::string svg = emit_chart(rows, ChartOptions{.kind = ChartKind::Line, .title = "alpha & specials"});
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "<polyline") == 2);
  CHECK(svg.find("alpha &amp; specials") != std::string::npos);
  CHECK(svg.find("N (request sequence length)") != std::string::npos);
  CHECK(svg.find("total access cost") != std::string::npos);

  const auto mtf = polyline_points(svg, "c_mtf");
  const auto imtf = polyline_points(svg, "c_imtf");
  REQUIRE(mtf.size() == 10);
  REQUIRE(imtf.size() == 10);
  for (std::size_t i = 0; i < mtf.size(); ++i) {
    CHECK(mtf[i].first == imtf[i].first);
    // SVG y grows downwards: a lower cost sits further down.
    if (rows[i].g > 0) CHECK(imtf[i].second > mtf[i].second);
  }
}

TEST_CASE("bar charts") {
  const auto single = emit_chart({worked_pair()}, ChartOptions{.kind = ChartKind::Bar});
  CHECK(count(single, "class=\"bar\"") == 2);
  CHECK(count(single, "data-n=\"5\"") == 2);

  const auto rows = run_experiment(numeric_table_spec(1));
  const auto svg = emit_chart(rows, ChartOptions{.kind = ChartKind::Bar, .series = {Series::Gain}});
  CHECK(count(svg, "class=\"bar\"") == 12);
  for (const char* base : {"base16", "base10", "base8", "base2"}) {
    CHECK(count(svg, std::string("data-group=\"") + base + "\"") == 3);
  }
  CHECK(svg.find("gain g (%)") != std::string::npos);
}

TEST_CASE("chart input errors") {
  CHECK_THROWS_AS(emit_chart({}, ChartOptions{}), EmptyInput);
  CHECK_THROWS_AS(emit_chart({worked_pair()}, ChartOptions{.series = {}}), EmptyInput);
  CHECK(parse_series("g") == Series::Gain);
  CHECK(parse_chart_kind("bar") == ChartKind::Bar);
  CHECK_THROWS_AS(parse_series("h"), ParseError);
  CHECK_THROWS_AS(parse_chart_kind("pie"), ParseError);
}
