#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "listaccess/list_configuration.hpp"

namespace listaccess {

using Cost = std::uint64_t;

// Full: accessing position i costs i. Partial: it costs i - 1, the number of
// comparisons against the elements in front of it.
enum class CostModel { Full, Partial };

constexpr Cost access_cost(std::size_t position, CostModel model) {
  return model == CostModel::Full ? Cost{position} : Cost{position} - 1;
}

std::string_view to_string(CostModel model);

// Accepts "full" or "partial" (case-insensitive). Throws ParseError.
CostModel parse_cost_model(std::string_view text);

struct CostReport {
  std::vector<Cost> per_access_costs;
  Cost paid_exchange_count = 0;
  // Free exchanges actually performed.
  std::size_t move_count = 0;
  Cost total_cost = 0;
  ListConfiguration final_list;

  Cost recomputed_total() const {
    return std::accumulate(per_access_costs.begin(), per_access_costs.end(), Cost{0}) + paid_exchange_count;
  }
};

}  // namespace listaccess
