#include "listaccess/experiments.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "listaccess/algorithms.hpp"
#include "listaccess/errors.hpp"

namespace listaccess {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  return trial == 0 ? seed : splitmix64(seed + trial);
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = line.find(sep, start);
    out.emplace_back(line.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

template <typename Int>
Int parse_unsigned(const std::string& token, std::string_view what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("expected a non-negative integer for " + std::string(what) + ", got '" + token + "'");
  }
  try {
    return static_cast<Int>(std::stoull(token));
  } catch (const std::out_of_range&) {
    throw ParseError(std::string(what) + " out of range: " + token);
  }
}

std::string fixed2(double value) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.setf(std::ios::fixed);
  out.precision(2);
  out << value;
  return out.str();
}

}  // namespace

ExperimentRow compare_pair(std::string label, const ListConfiguration& list, const RequestSequence& seq,
                           CostModel model) {
  const CostReport mtf = run_mtf(list, seq, model);
  const CostReport imtf = run_imtf(list, seq, model);
  return ExperimentRow{.label = std::move(label),
                       .n = seq.size(),
                       .l = list.size(),
                       .c_mtf = mtf.total_cost,
                       .c_imtf = imtf.total_cost,
                       .g = gain(mtf.total_cost, imtf.total_cost)};
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  if (spec.rows.empty()) throw InvalidSpec("experiment needs at least one row");
  if (spec.trials == 0) throw InvalidSpec("experiment needs at least one trial per row");
  std::vector<ExperimentRow> rows;
  for (const RowSource& source : spec.rows) {
    if (const auto* gen = std::get_if<GenSpec>(&source)) {
      for (std::size_t t = 0; t < spec.trials; ++t) {
        GenSpec trial_spec = *gen;
        trial_spec.seed = trial_seed(gen->seed, t);
        const RequestSequence seq = gen_sequence(trial_spec);
        ExperimentRow row = compare_pair(gen->family.label(), build_list(seq), seq, spec.model);
        row.seed = trial_spec.seed;
        row.trial = t;
        rows.push_back(std::move(row));
      }
    } else {
      const auto& file = std::get<FileSource>(source);
      const RequestSequence seq = load_sequence_file(file.path, file.family).sequence;
      rows.push_back(compare_pair(file.path.filename().string(), build_list(seq), seq, spec.model));
    }
  }
  return rows;
}

std::string format_gain(Cost c_mtf, Cost c_imtf) {
  if (c_mtf == 0) throw DivisionByZero("gain is undefined when the MTF cost is zero");
  const bool negative = c_imtf > c_mtf;
  const Cost diff = negative ? c_imtf - c_mtf : c_mtf - c_imtf;
  // Hundredths of a percent, rounded half away from zero.
  const Cost hundredths = (diff * 20000 + c_mtf) / (2 * c_mtf);
  std::string out = negative && hundredths != 0 ? "-" : "";
  out += std::to_string(hundredths / 100);
  out += '.';
  const Cost frac = hundredths % 100;
  if (frac < 10) out += '0';
  out += std::to_string(frac);
  return out;
}

std::string emit_csv(const std::vector<ExperimentRow>& rows) {
  if (rows.empty()) throw EmptyInput("no experiment rows to write");
  std::string out(kCsvHeader);
  out += '\n';
  for (const ExperimentRow& row : rows) {
    out += std::to_string(row.n) + ',' + std::to_string(row.l) + ',' + std::to_string(row.c_mtf) + ',' +
           std::to_string(row.c_imtf) + ',' + format_gain(row.c_mtf, row.c_imtf) + '\n';
  }
  return out;
}

std::vector<ExperimentRow> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ParseError("missing CSV header " + std::string(kCsvHeader));
  std::vector<ExperimentRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 5) throw ParseError("line " + std::to_string(line_no) + ": expected 5 fields");
    ExperimentRow row;
    row.n = parse_unsigned<std::size_t>(fields[0], "N");
    row.l = parse_unsigned<std::size_t>(fields[1], "L");
    row.c_mtf = parse_unsigned<Cost>(fields[2], "C_MTF");
    row.c_imtf = parse_unsigned<Cost>(fields[3], "C_IMTF");
    try {
      std::size_t used = 0;
      row.g = std::stod(fields[4], &used);
      if (used != fields[4].size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": bad gain '" + fields[4] + "'");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CellSummary> summarize(const std::vector<ExperimentRow>& rows) {
  std::vector<CellSummary> cells;
  std::map<std::pair<std::string, std::size_t>, std::vector<const ExperimentRow*>> members;
  for (const ExperimentRow& row : rows) {
    auto& bucket = members[{row.label, row.n}];
    if (bucket.empty()) cells.push_back(CellSummary{.label = row.label, .n = row.n});
    bucket.push_back(&row);
  }
  for (CellSummary& cell : cells) {
    const auto& bucket = members.at({cell.label, cell.n});
    const double count = static_cast<double>(bucket.size());
    cell.trials = bucket.size();
    for (const ExperimentRow* row : bucket) {
      cell.mean_l += static_cast<double>(row->l) / count;
      cell.mean_c_mtf += static_cast<double>(row->c_mtf) / count;
      cell.mean_c_imtf += static_cast<double>(row->c_imtf) / count;
      cell.mean_g += row->g / count;
    }
    if (bucket.size() > 1) {
      double squares = 0.0;
      for (const ExperimentRow* row : bucket) squares += (row->g - cell.mean_g) * (row->g - cell.mean_g);
      cell.stddev_g = std::sqrt(squares / (count - 1.0));
    }
  }
  return cells;
}

std::string emit_summary_csv(const std::vector<CellSummary>& cells) {
  if (cells.empty()) throw EmptyInput("no cells to write");
  std::string out = "family,N,trials,L_mean,C_MTF_mean,C_IMTF_mean,g_mean,g_stddev\n";
  for (const CellSummary& c : cells) {
    out += c.label + ',' + std::to_string(c.n) + ',' + std::to_string(c.trials) + ',' + fixed2(c.mean_l) + ',' +
           fixed2(c.mean_c_mtf) + ',' + fixed2(c.mean_c_imtf) + ',' + fixed2(c.mean_g) + ',' + fixed2(c.stddev_g) +
           '\n';
  }
  return out;
}

ExperimentSpec parse_experiment_config(std::string_view text, const std::filesystem::path& base_dir) {
  ExperimentSpec spec;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    const std::string where = "config line " + std::to_string(line_no) + ": ";
    try {
      if (tok[0] == "alpha" && tok.size() == 3) {
        spec.rows.emplace_back(GenSpec{Family::alpha_special(), parse_unsigned<std::size_t>(tok[1], "N"),
                                       parse_unsigned<std::uint64_t>(tok[2], "seed")});
      } else if (tok[0] == "numeric" && tok.size() == 4) {
        spec.rows.emplace_back(GenSpec{Family::numeric(parse_unsigned<int>(tok[1], "base")),
                                       parse_unsigned<std::size_t>(tok[2], "N"),
                                       parse_unsigned<std::uint64_t>(tok[3], "seed")});
      } else if (tok[0] == "file" && tok.size() == 3 && tok[1] == "alpha") {
        spec.rows.emplace_back(FileSource{base_dir / tok[2], Family::alpha_special()});
      } else if (tok[0] == "file" && tok.size() == 4 && tok[1] == "numeric") {
        spec.rows.emplace_back(FileSource{base_dir / tok[3], Family::numeric(parse_unsigned<int>(tok[2], "base"))});
      } else {
        throw ParseError("unrecognised row '" + line + "'");
      }
    } catch (const Error& e) {
      throw ParseError(where + e.what());
    }
    if (const auto* gen = std::get_if<GenSpec>(&spec.rows.back()); gen && gen->n == 0) {
      throw ParseError(where + "N must be at least 1");
    }
  }
  if (spec.rows.empty()) throw ParseError("experiment config has no rows");
  return spec;
}

ExperimentSpec load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open experiment config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(buffer.str(), path.parent_path());
}

ExperimentSpec alpha_table_spec(std::uint64_t seed, std::size_t trials) {
  ExperimentSpec spec;
  spec.trials = trials;
  for (std::size_t r = 0; r < 10; ++r) {
    spec.rows.emplace_back(GenSpec{Family::alpha_special(), 100 * (r + 1), seed + r});
  }
  return spec;
}

ExperimentSpec numeric_table_spec(std::uint64_t seed, std::size_t trials) {
  ExperimentSpec spec;
  spec.trials = trials;
  std::uint64_t offset = 0;
  for (std::size_t n : {50, 100, 200}) {
    for (int base : {16, 10, 8, 2}) spec.rows.emplace_back(GenSpec{Family::numeric(base), n, seed + offset++});
  }
  return spec;
}

}  // namespace listaccess
