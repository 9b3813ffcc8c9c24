#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "listaccess/cost_model.hpp"
#include "listaccess/datagen.hpp"

namespace listaccess {

struct FileSource {
  std::filesystem::path path;
  Family family = Family::alpha_special();
};

using RowSource = std::variant<GenSpec, FileSource>;

// Trial t of a generated row uses seed + t; file rows run once regardless of
// the trial count.
struct ExperimentSpec {
  std::vector<RowSource> rows;
  CostModel model = CostModel::Full;
  std::size_t trials = 1;
};

// One MTF-vs-IMTF comparison on a single (list, sequence) pair.
struct ExperimentRow {
  std::string label;  // family label or file name, used to group chart series
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::size_t n = 0;
  std::size_t l = 0;
  Cost c_mtf = 0;
  Cost c_imtf = 0;
  double g = 0.0;
};

// Runs MTF and IMTF on the same list and sequence.
ExperimentRow compare_pair(std::string label, const ListConfiguration& list, const RequestSequence& seq,
                           CostModel model);

// Rows come back in spec order, trials of a row adjacent. Throws InvalidSpec
// for an empty spec or zero trials.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

// The gain rounded half away from zero to two decimals, computed exactly from
// the integer costs ("19.03" for 867 vs 702).
std::string format_gain(Cost c_mtf, Cost c_imtf);

inline constexpr std::string_view kCsvHeader = "N,L,C_MTF,C_IMTF,g_percent";

// Header plus one line per row. Throws EmptyInput.
std::string emit_csv(const std::vector<ExperimentRow>& rows);

// Reads what emit_csv writes. Labels and seeds are not part of the format and
// come back empty. Throws ParseError.
std::vector<ExperimentRow> parse_csv(std::string_view text);

// Mean and sample standard deviation over the trials of one (label, N) cell.
struct CellSummary {
  std::string label;
  std::size_t n = 0;
  std::size_t trials = 0;
  double mean_l = 0.0;
  double mean_c_mtf = 0.0;
  double mean_c_imtf = 0.0;
  double mean_g = 0.0;
  double stddev_g = 0.0;
};

// Cells appear in first-seen order.
std::vector<CellSummary> summarize(const std::vector<ExperimentRow>& rows);

std::string emit_summary_csv(const std::vector<CellSummary>& cells);

// Plain-text experiment config, one row per line:
//   alpha <N> <seed>
//   numeric <base> <N> <seed>
//   file alpha <path>
//   file numeric <base> <path>
// Blank lines and lines starting with '#' are ignored. Relative file paths are
// resolved against `base_dir`. Throws ParseError.
ExperimentSpec parse_experiment_config(std::string_view text, const std::filesystem::path& base_dir = {});
ExperimentSpec load_experiment_config(const std::filesystem::path& path);

// The two dataset layouts of the original study: the keyboard alphabet for
// N = 100, 200, ..., 1000, and bases 16/10/8/2 for N = 50, 100, 200.
ExperimentSpec alpha_table_spec(std::uint64_t seed, std::size_t trials = 1);
ExperimentSpec numeric_table_spec(std::uint64_t seed, std::size_t trials = 1);

}  // namespace listaccess
