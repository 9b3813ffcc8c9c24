#include "listaccess/chart.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "listaccess/errors.hpp"

namespace listaccess {
namespace {

constexpr std::string_view kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                         "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct Point {
  std::size_t n = 0;
  double c_mtf = 0.0;
  double c_imtf = 0.0;
  double g = 0.0;
  std::size_t count = 0;

  double value(Series s) const {
    switch (s) {
      case Series::CMtf:
        return c_mtf;
      case Series::CImtf:
        return c_imtf;
      case Series::Gain:
        return g;
    }
    return 0.0;
  }
};

struct Group {
  std::string label;
  std::vector<Point> points;  // ascending N
};

std::vector<Group> collect(const std::vector<ExperimentRow>& rows) {
  std::vector<Group> groups;
  for (const ExperimentRow& row : rows) {
    auto g = std::find_if(groups.begin(), groups.end(), [&](const Group& x) { return x.label == row.label; });
    if (g == groups.end()) g = groups.insert(groups.end(), Group{row.label, {}});
    auto p = std::find_if(g->points.begin(), g->points.end(), [&](const Point& x) { return x.n == row.n; });
    if (p == g->points.end()) p = g->points.insert(g->points.end(), Point{.n = row.n});
    p->c_mtf += static_cast<double>(row.c_mtf);
    p->c_imtf += static_cast<double>(row.c_imtf);
    p->g += row.g;
    ++p->count;
  }
  for (Group& g : groups) {
    for (Point& p : g.points) {
      const double k = static_cast<double>(p.count);
      p.c_mtf /= k;
      p.c_imtf /= k;
      p.g /= k;
    }
    std::sort(g.points.begin(), g.points.end(), [](const Point& a, const Point& b) { return a.n < b.n; });
  }
  return groups;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string num(double v) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.setf(std::ios::fixed);
  out.precision(2);
  out << v;
  return out.str();
}

std::string series_title(Series s) {
  switch (s) {
    case Series::CMtf:
      return "C_MTF";
    case Series::CImtf:
      return "C_IMTF";
    case Series::Gain:
      return "g (%)";
  }
  return "";
}

}  // namespace

std::string_view to_string(ChartKind kind) { return kind == ChartKind::Line ? "line" : "bar"; }

std::string_view to_string(Series series) {
  switch (series) {
    case Series::CMtf:
      return "c_mtf";
    case Series::CImtf:
      return "c_imtf";
    case Series::Gain:
      return "g";
  }
  return "unknown";
}

ChartKind parse_chart_kind(std::string_view text) {
  if (text == "line") return ChartKind::Line;
  if (text == "bar") return ChartKind::Bar;
  throw ParseError("unknown chart kind '" + std::string(text) + "' (expected line or bar)");
}

Series parse_series(std::string_view text) {
  if (text == "c_mtf" || text == "mtf") return Series::CMtf;
  if (text == "c_imtf" || text == "imtf") return Series::CImtf;
  if (text == "g" || text == "gain") return Series::Gain;
  throw ParseError("unknown series '" + std::string(text) + "' (expected c_mtf, c_imtf or g)");
}

std::string emit_chart(const std::vector<ExperimentRow>& rows, const ChartOptions& options) {
  if (rows.empty()) throw EmptyInput("no rows to chart");
  if (options.series.empty()) throw EmptyInput("no series selected");

  const std::vector<Group> groups = collect(rows);
  const double left = 80, right = 170, top = 50, bottom = 70;
  const double width = options.width, height = options.height;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double lo = 0.0, hi = 0.0;
  std::size_t n_min = groups.front().points.front().n, n_max = n_min;
  for (const Group& g : groups) {
    for (const Point& p : g.points) {
      n_min = std::min(n_min, p.n);
      n_max = std::max(n_max, p.n);
      for (Series s : options.series) {
        lo = std::min(lo, p.value(s));
        hi = std::max(hi, p.value(s));
      }
    }
  }
  if (hi <= lo) hi = lo + 1.0;
  hi += (hi - lo) * 0.05;
  auto y_of = [&](double v) { return top + plot_h * (hi - v) / (hi - lo); };

  const bool only_gain = std::all_of(options.series.begin(), options.series.end(),
                                     [](Series s) { return s == Series::Gain; });
  const bool no_gain = std::none_of(options.series.begin(), options.series.end(),
                                    [](Series s) { return s == Series::Gain; });
  const std::string y_label = only_gain ? "gain g (%)" : no_gain ? "total access cost" : "value";

  std::ostringstream svg;
  svg.imbue(std::locale::classic());
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << options.height
      << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\" data-kind=\"" << to_string(options.kind)
      << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\"" << options.height
      << "\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    svg << "<text class=\"title\" x=\"" << num(width / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
        << escape(options.title) << "</text>\n";
  }

  // Axes, y ticks and axis labels.
  svg << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << num(left) << "\" y1=\"" << num(top + plot_h) << "\" x2=\"" << num(left + plot_w)
      << "\" y2=\"" << num(top + plot_h) << "\"/>\n"
      << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left) << "\" y2=\""
      << num(top + plot_h) << "\"/>\n"
      << "</g>\n";
  for (int t = 0; t <= 5; ++t) {
    const double v = lo + (hi - lo) * t / 5.0;
    svg << "<text class=\"ytick\" x=\"" << num(left - 6) << "\" y=\"" << num(y_of(v) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << num(v) << "</text>\n";
  }
  svg << "<text class=\"xlabel\" x=\"" << num(left + plot_w / 2) << "\" y=\"" << num(height - 12)
      << "\" text-anchor=\"middle\" font-size=\"13\">N (request sequence length)</text>\n"
      << "<text class=\"ylabel\" x=\"18\" y=\"" << num(top + plot_h / 2) << "\" text-anchor=\"middle\" font-size=\"13\""
      << " transform=\"rotate(-90 18 " << num(top + plot_h / 2) << ")\">" << y_label << "</text>\n";

  std::vector<std::pair<std::string, std::string_view>> legend;
  std::size_t colour = 0;

  if (options.kind == ChartKind::Line) {
    auto x_of = [&](std::size_t n) {
      if (n_max == n_min) return left + plot_w / 2;
      return left + plot_w * static_cast<double>(n - n_min) / static_cast<double>(n_max - n_min);
    };
    std::vector<std::size_t> ticks;
    for (const Group& g : groups)
      for (const Point& p : g.points) ticks.push_back(p.n);
    std::sort(ticks.begin(), ticks.end());
    ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
    for (std::size_t n : ticks) {
      svg << "<text class=\"xtick\" x=\"" << num(x_of(n)) << "\" y=\"" << num(top + plot_h + 16)
          << "\" text-anchor=\"middle\" font-size=\"11\">" << n << "</text>\n";
    }
    for (Series s : options.series) {
      for (const Group& g : groups) {
        const std::string_view stroke = kPalette[colour++ % std::size(kPalette)];
        svg << "<polyline data-series=\"" << to_string(s) << "\" data-group=\"" << escape(g.label)
            << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < g.points.size(); ++i) {
          svg << (i ? " " : "") << num(x_of(g.points[i].n)) << ',' << num(y_of(g.points[i].value(s)));
        }
        svg << "\"/>\n";
        for (const Point& p : g.points) {
          svg << "<circle cx=\"" << num(x_of(p.n)) << "\" cy=\"" << num(y_of(p.value(s))) << "\" r=\"3\" fill=\""
              << stroke << "\"/>\n";
        }
        legend.emplace_back(groups.size() > 1 ? series_title(s) + " " + g.label : series_title(s), stroke);
      }
    }
  } else {
    std::size_t clusters = 0;
    for (const Group& g : groups) clusters += g.points.size();
    const double cluster_w = plot_w / static_cast<double>(clusters);
    const double bar_w = cluster_w * 0.8 / static_cast<double>(options.series.size());
    const double zero_y = y_of(0.0);
    std::size_t cluster = 0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const Group& g = groups[gi];
      for (const Point& p : g.points) {
        const double x0 = left + cluster_w * static_cast<double>(cluster) + cluster_w * 0.1;
        for (std::size_t si = 0; si < options.series.size(); ++si) {
          const Series s = options.series[si];
          const double y = y_of(p.value(s));
          svg << "<rect class=\"bar\" data-series=\"" << to_string(s) << "\" data-group=\"" << escape(g.label)
              << "\" data-n=\"" << p.n << "\" data-value=\"" << num(p.value(s)) << "\" x=\""
              << num(x0 + bar_w * static_cast<double>(si)) << "\" y=\"" << num(std::min(y, zero_y))
              << "\" width=\"" << num(bar_w) << "\" height=\"" << num(std::abs(zero_y - y)) << "\" fill=\""
              << kPalette[si % std::size(kPalette)] << "\"/>\n";
        }
        svg << "<text class=\"xtick\" x=\"" << num(x0 + cluster_w * 0.4) << "\" y=\"" << num(top + plot_h + 16)
            << "\" text-anchor=\"middle\" font-size=\"11\">" << p.n << "</text>\n";
        ++cluster;
      }
      if (groups.size() > 1) {
        const double start = left + cluster_w * static_cast<double>(cluster - g.points.size());
        svg << "<text class=\"group\" x=\"" << num(start + cluster_w * static_cast<double>(g.points.size()) / 2)
            << "\" y=\"" << num(top + plot_h + 32) << "\" text-anchor=\"middle\" font-size=\"12\">"
            << escape(g.label) << "</text>\n";
      }
    }
    for (std::size_t si = 0; si < options.series.size(); ++si) {
      legend.emplace_back(series_title(options.series[si]), kPalette[si % std::size(kPalette)]);
    }
  }

  svg << "<g class=\"legend\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < legend.size(); ++i) {
    const double y = top + 18.0 * static_cast<double>(i);
    svg << "<rect x=\"" << num(width - right + 16) << "\" y=\"" << num(y) << "\" width=\"12\" height=\"12\" fill=\""
        << legend[i].second << "\"/>\n"
        << "<text x=\"" << num(width - right + 34) << "\" y=\"" << num(y + 10) << "\">" << escape(legend[i].first)
        << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace listaccess
