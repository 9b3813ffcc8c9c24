#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "listaccess/experiments.hpp"

namespace listaccess {

enum class ChartKind { Line, Bar };
enum class Series { CMtf, CImtf, Gain };

std::string_view to_string(ChartKind kind);
std::string_view to_string(Series series);
ChartKind parse_chart_kind(std::string_view text);
Series parse_series(std::string_view text);

struct ChartOptions {
  ChartKind kind = ChartKind::Line;
  std::vector<Series> series{Series::CMtf, Series::CImtf};
  std::string title;
  int width = 800;
  int height = 480;
};

// Renders the selected series against N as a standalone SVG document. Rows
// sharing a label form one group (one polyline per group and series, or one
// bar cluster per group and N); repeated (label, N) rows are averaged.
//
// Elements carry data attributes so the output can be checked mechanically:
// each polyline has data-series and data-group, each bar rect has
// data-series, data-group, data-n and data-value.
//
// Throws EmptyInput when rows or series are empty.
std::string emit_chart(const std::vector<ExperimentRow>& rows, const ChartOptions& options);

}  // namespace listaccess
