#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "listaccess/algorithms.hpp"
#include "listaccess/chart.hpp"
#include "listaccess/datagen.hpp"
#include "listaccess/errors.hpp"
#include "listaccess/experiments.hpp"

namespace listaccess::cli {
namespace {

struct FamilyFlags {
  std::string family = "alpha";
  int base = 0;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--family", family, "Dataset family")->check(CLI::IsMember({"alpha", "numeric"}));
    cmd.add_option("--base", base, "Number base for the numeric family")->check(CLI::IsMember({2, 8, 10, 16}));
  }

  Family resolve() const {
    if (family == "alpha") {
      if (base != 0) throw InvalidSpec("--base only applies to --family numeric");
      return Family::alpha_special();
    }
    if (base == 0) throw InvalidSpec("--family numeric requires --base");
    return Family::numeric(base);
  }
};

// Symbols for a run: the request file plus an optional explicit list.
struct RunInputs {
  std::string seq_path;
  std::string list_inline;
  std::string list_path;
  std::string model = "full";
  FamilyFlags family;

  void add_to(CLI::App& cmd, bool seq_required) {
    auto* seq = cmd.add_option("--seq", seq_path, "Request sequence file");
    if (seq_required) seq->required();
    auto* inline_list = cmd.add_option("--list", list_inline, "Initial list as a string of symbols, e.g. 123");
    cmd.add_option("--list-file", list_path, "Initial list from a file")->excludes(inline_list);
    cmd.add_option("--model", model, "Cost model")->check(CLI::IsMember({"full", "partial"}));
    family.add_to(cmd);
  }

  RequestSequence load_sequence(std::ostream& err) const {
    const ParsedSequence parsed = load_sequence_file(seq_path, family.resolve());
    if (parsed.skipped > 0) {
      err << "note: skipped " << parsed.skipped << " characters outside the " << family.resolve().label()
          << " alphabet\n";
    }
    return parsed.sequence;
  }

  ListConfiguration load_list(const RequestSequence& seq) const {
    std::optional<ParsedSequence> parsed;
    if (!list_inline.empty()) parsed = parse_sequence(list_inline, family.resolve());
    if (!list_path.empty()) parsed = load_sequence_file(list_path, family.resolve());
    if (!parsed) return build_list(seq);
    if (parsed->skipped > 0) throw ParseError("list contains characters outside the alphabet");
    const auto items = parsed->sequence.items();
    return ListConfiguration(std::vector<Symbol>(items.begin(), items.end()));
  }
};

std::size_t oracle_limit(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kOracleLimitEnv); env && *env) {
    const std::string text(env);
    if (text.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(std::string(kOracleLimitEnv) + " must be a non-negative integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(std::stoull(text));
  }
  return kDefaultOracleMaxN;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string join_costs(const std::vector<Cost>& costs) {
  std::string out;
  for (std::size_t i = 0; i < costs.size(); ++i) out += (i ? " " : "") + std::to_string(costs[i]);
  return out;
}

ChartOptions chart_options(const std::string& kind, const std::vector<std::string>& series, const std::string& title) {
  ChartOptions options{.kind = parse_chart_kind(kind), .series = {}, .title = title};
  for (const std::string& s : series) options.series.push_back(parse_series(s));
  return options;
}

void print_rows(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << std::left << std::setw(12) << "family" << std::right << std::setw(7) << "N" << std::setw(6) << "L"
      << std::setw(10) << "C_MTF" << std::setw(10) << "C_IMTF" << std::setw(9) << "g" << '\n';
  for (const ExperimentRow& r : rows) {
    out << std::left << std::setw(12) << r.label << std::right << std::setw(7) << r.n << std::setw(6) << r.l
        << std::setw(10) << r.c_mtf << std::setw(10) << r.c_imtf << std::setw(8) << format_gain(r.c_mtf, r.c_imtf)
        << "%\n";
  }
}

void print_cells(std::ostream& out, const std::vector<CellSummary>& cells) {
  out << "multi-trial summary (mean +/- sample stddev of g):\n";
  for (const CellSummary& c : cells) {
    out << "  " << std::left << std::setw(10) << c.label << std::right << " N=" << std::setw(5) << c.n
        << " trials=" << c.trials << " L=" << std::fixed << std::setprecision(2) << c.mean_l
        << " g=" << c.mean_g << "% +/- " << c.stddev_g << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"List accessing toolkit: MTF and IMTF cost experiments", "listaccess"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a seeded request sequence file");
  FamilyFlags gen_family;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen_family.add_to(*gen);
  gen->add_option("--n", gen_n, "Sequence length")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output path")->required();

  // run
  auto* run_cmd = app.add_subcommand("run", "Serve a request sequence with one algorithm");
  RunInputs run_inputs;
  std::string run_alg;
  bool run_trace = false;
  std::optional<std::size_t> run_max_n;
  run_cmd->add_option("--alg", run_alg, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"mtf", "imtf", "static", "oracle"}));
  run_inputs.add_to(*run_cmd, true);
  run_cmd->add_flag("--trace", run_trace, "Print the per-access costs");
  run_cmd->add_option("--max-n", run_max_n, "Oracle request limit");

  // compare
  auto* compare = app.add_subcommand("compare", "Compare MTF and IMTF over one or more datasets");
  std::string cmp_spec, cmp_preset, cmp_csv, cmp_chart, cmp_summary;
  std::string cmp_kind = "line";
  std::vector<std::string> cmp_series{"c_mtf", "c_imtf"};
  std::size_t cmp_trials = 1;
  std::optional<std::size_t> cmp_n;
  std::uint64_t cmp_seed = 1;
  RunInputs cmp_inputs;
  compare->add_option("--spec", cmp_spec, "Experiment config file");
  compare->add_option("--preset", cmp_preset, "Built-in experiment layout")
      ->check(CLI::IsMember({"alpha-table", "numeric-table"}));
  compare->add_option("--n", cmp_n, "Generate a single row of this length")->check(CLI::PositiveNumber);
  compare->add_option("--seed", cmp_seed, "Seed for --n and --preset rows")->capture_default_str();
  compare->add_option("--trials", cmp_trials, "Trials per generated row")->check(CLI::PositiveNumber);
  compare->add_option("--out-csv", cmp_csv, "Write per-run rows as CSV (stdout if omitted)");
  compare->add_option("--summary-csv", cmp_summary, "Write per-cell mean/stddev CSV");
  compare->add_option("--out-chart", cmp_chart, "Write an SVG chart");
  compare->add_option("--chart-kind", cmp_kind, "line or bar")->check(CLI::IsMember({"line", "bar"}));
  compare->add_option("--series", cmp_series, "Series to chart: c_mtf, c_imtf, g")->delimiter(',');
  cmp_inputs.add_to(*compare, false);

  // chart
  auto* chart = app.add_subcommand("chart", "Render an SVG chart from a results CSV");
  std::string chart_csv, chart_out, chart_title;
  std::string chart_kind = "line";
  std::vector<std::string> chart_series{"c_mtf", "c_imtf"};
  bool chart_group_l = false;
  chart->add_option("--csv", chart_csv, "Results CSV written by compare")->required();
  chart->add_option("--out", chart_out, "Output SVG path")->required();
  chart->add_option("--kind", chart_kind, "line or bar")->check(CLI::IsMember({"line", "bar"}));
  chart->add_option("--series", chart_series, "Series: c_mtf, c_imtf, g")->delimiter(',');
  chart->add_option("--title", chart_title, "Chart title");
  chart->add_flag("--group-by-l", chart_group_l, "One group per list size L");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum vs MTF and IMTF on a small instance");
  RunInputs oracle_inputs;
  std::optional<std::size_t> oracle_max_n;
  oracle_inputs.add_to(*oracle, true);
  oracle->add_option("--max-n", oracle_max_n, "Request limit (overrides the environment)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen) {
      const RequestSequence seq = gen_sequence(GenSpec{gen_family.resolve(), gen_n, gen_seed});
      write_sequence_file(gen_out, seq);
      out << "N=" << seq.size() << " distinct=" << locality_stats(seq).distinct << " out=" << gen_out << '\n';
      return 0;
    }

    if (*run_cmd) {
      const RequestSequence seq = run_inputs.load_sequence(err);
      const ListConfiguration list = run_inputs.load_list(seq);
      const AlgorithmId id = parse_algorithm(run_alg);
      const CostModel model = parse_cost_model(run_inputs.model);
      const CostReport report = run_algorithm(id, list, seq, model, oracle_limit(run_max_n));
      out << "algorithm: " << to_string(id) << '\n'
          << "model: " << to_string(model) << '\n'
          << "N: " << seq.size() << '\n'
          << "L: " << list.size() << '\n'
          << "total_cost: " << report.total_cost << '\n'
          << "paid_exchanges: " << report.paid_exchange_count << '\n'
          << "moves: " << report.move_count << '\n'
          << "final_list: " << report.final_list.to_string() << '\n';
      if (run_trace) out << "trace: " << join_costs(report.per_access_costs) << '\n';
      return 0;
    }

    if (*compare) {
      const int sources = !cmp_spec.empty() + !cmp_preset.empty() + cmp_n.has_value() + !cmp_inputs.seq_path.empty();
      if (sources != 1) throw InvalidSpec("compare needs exactly one of --spec, --preset, --n or --seq");
      const CostModel model = parse_cost_model(cmp_inputs.model);
      std::vector<ExperimentRow> rows;
      if (!cmp_inputs.seq_path.empty()) {
        const RequestSequence seq = cmp_inputs.load_sequence(err);
        rows.push_back(compare_pair(std::filesystem::path(cmp_inputs.seq_path).filename().string(),
                                    cmp_inputs.load_list(seq), seq, model));
      } else {
        ExperimentSpec spec;
        if (!cmp_spec.empty()) spec = load_experiment_config(cmp_spec);
        if (cmp_preset == "alpha-table") spec = alpha_table_spec(cmp_seed);
        if (cmp_preset == "numeric-table") spec = numeric_table_spec(cmp_seed);
        if (cmp_n) spec.rows.emplace_back(GenSpec{cmp_inputs.family.resolve(), *cmp_n, cmp_seed});
        spec.model = model;
        spec.trials = cmp_trials;
        rows = run_experiment(spec);
      }

      print_rows(out, rows);
      if (rows.size() == 1) out << "g = " << format_gain(rows[0].c_mtf, rows[0].c_imtf) << "%\n";
      const auto cells = summarize(rows);
      if (cmp_trials > 1) print_cells(out, cells);

      const std::string csv = emit_csv(rows);
      if (cmp_csv.empty()) {
        out << csv;
      } else {
        write_text(cmp_csv, csv);
      }
      if (!cmp_summary.empty()) write_text(cmp_summary, emit_summary_csv(cells));
      if (!cmp_chart.empty()) {
        write_text(cmp_chart, emit_chart(rows, chart_options(cmp_kind, cmp_series, "MTF vs IMTF")));
      }
      return 0;
    }

    if (*chart) {
      std::vector<ExperimentRow> rows = parse_csv(read_text(chart_csv));
      if (chart_group_l) {
        for (ExperimentRow& r : rows) r.label = "L=" + std::to_string(r.l);
      }
      write_text(chart_out, emit_chart(rows, chart_options(chart_kind, chart_series, chart_title)));
      out << "wrote " << chart_out << " (" << rows.size() << " rows)\n";
      return 0;
    }

    if (*oracle) {
      const RequestSequence seq = oracle_inputs.load_sequence(err);
      const ListConfiguration list = oracle_inputs.load_list(seq);
      const CostModel model = parse_cost_model(oracle_inputs.model);
      const CostReport best = run_bruteforce_oracle(list, seq, model, oracle_limit(oracle_max_n));
      const CostReport mtf = run_mtf(list, seq, model);
      const CostReport imtf = run_imtf(list, seq, model);
      const CostReport fixed = run_static(list, seq, model);
      out << "oracle: " << best.total_cost << '\n'
          << "mtf: " << mtf.total_cost << '\n'
          << "imtf: " << imtf.total_cost << '\n'
          << "static: " << fixed.total_cost << '\n';
      if (best.total_cost > std::min({mtf.total_cost, imtf.total_cost, fixed.total_cost})) {
        err << "error: oracle cost exceeds a heuristic's cost\n";
        return kDominanceViolated;
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}

}  // namespace listaccess::cli
