#include "listaccess/cost_model.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "listaccess/errors.hpp"

namespace listaccess {

std::string_view to_string(CostModel model) { return model == CostModel::Full ? "full" : "partial"; }

CostModel parse_cost_model(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "full") return CostModel::Full;
  if (lower == "partial") return CostModel::Partial;
  throw ParseError("unknown cost model '" + std::string(text) + "' (expected full or partial)");
}

}  // namespace listaccess
