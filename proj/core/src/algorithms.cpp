#include "listaccess/algorithms.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "listaccess/errors.hpp"

namespace listaccess {
namespace {

// Serves every request in order: charge the access, then ask `should_move`
// (1-based request index, position before the move) whether to move the
// element to the front.
template <typename MovePolicy>
CostReport simulate(ListConfiguration list, const RequestSequence& seq, CostModel model, MovePolicy should_move) {
  seq.validate_against(list);
  std::vector<Cost> costs;
  costs.reserve(seq.size());
  Cost total = 0;
  std::size_t moves = 0;
  for (std::size_t index = 1; index <= seq.size(); ++index) {
    const std::size_t position = list.find_position(seq.at(index));
    const Cost cost = access_cost(position, model);
    costs.push_back(cost);
    total += cost;
    if (should_move(index, position)) {
      list.move_to_front(position);
      ++moves;
    }
  }
  return CostReport{std::move(costs), 0, moves, total, std::move(list)};
}

class OracleSearch {
 public:
  OracleSearch(const RequestSequence& seq, CostModel model)
      : seq_(seq), model_(model), moves_(seq.size(), false), best_moves_(seq.size(), false) {}

  std::vector<bool> run(const ListConfiguration& list) {
    search(0, list, 0);
    return best_moves_;
  }

 private:
  void search(std::size_t index, const ListConfiguration& list, Cost so_far) {
    if (so_far >= best_) return;
    if (index == seq_.size()) {
      best_ = so_far;
      best_moves_ = moves_;
      return;
    }
    const std::size_t position = list.find_position(seq_.items()[index]);
    const Cost cost = so_far + access_cost(position, model_);
    search(index + 1, list, cost);
    // Moving the head is a no-op and moving after the last request changes
    // nothing that is charged, so neither branch is worth exploring.
    if (position > 1 && index + 1 < seq_.size()) {
      ListConfiguration moved = list;
      moved.move_to_front(position);
      moves_[index] = true;
      search(index + 1, moved, cost);
      moves_[index] = false;
    }
  }

  const RequestSequence& seq_;
  CostModel model_;
  Cost best_ = std::numeric_limits<Cost>::max();
  std::vector<bool> moves_;
  std::vector<bool> best_moves_;
};

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view to_string(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::MTF:
      return "mtf";
    case AlgorithmId::IMTF:
      return "imtf";
    case AlgorithmId::Static:
      return "static";
    case AlgorithmId::BruteForceOracle:
      return "oracle";
  }
  return "unknown";
}

AlgorithmId parse_algorithm(std::string_view text) {
  const std::string lower = lowercase(text);
  if (lower == "mtf") return AlgorithmId::MTF;
  if (lower == "imtf") return AlgorithmId::IMTF;
  if (lower == "static") return AlgorithmId::Static;
  if (lower == "oracle") return AlgorithmId::BruteForceOracle;
  throw ParseError("unknown algorithm '" + std::string(text) + "' (expected mtf, imtf, static or oracle)");
}

LookaheadWindow lookahead_window(const RequestSequence& seq, std::size_t current_index,
                                 std::size_t accessed_position) {
  if (current_index < 1 || current_index > seq.size()) {
    throw PositionOutOfRange("request index " + std::to_string(current_index) + " outside sequence of length " +
                             std::to_string(seq.size()));
  }
  if (accessed_position < 1) throw PositionOutOfRange("accessed position must be at least 1");
  return {.start_index = current_index + 1,
          .length = std::min(accessed_position - 1, seq.size() - current_index)};
}

bool lookahead_hit(const RequestSequence& seq, std::size_t current_index, std::size_t accessed_position) {
  const LookaheadWindow window = lookahead_window(seq, current_index, accessed_position);
  const Symbol target = seq.at(current_index);
  const auto requests = seq.items().subspan(window.start_index - 1, window.length);
  return std::find(requests.begin(), requests.end(), target) != requests.end();
}

CostReport run_mtf(ListConfiguration list, const RequestSequence& seq, CostModel model) {
  return simulate(std::move(list), seq, model, [](std::size_t, std::size_t) { return true; });
}

CostReport run_imtf(ListConfiguration list, const RequestSequence& seq, CostModel model) {
  return simulate(std::move(list), seq, model,
                  [&seq](std::size_t index, std::size_t position) { return lookahead_hit(seq, index, position); });
}

CostReport run_static(ListConfiguration list, const RequestSequence& seq, CostModel model) {
  return simulate(std::move(list), seq, model, [](std::size_t, std::size_t) { return false; });
}

CostReport run_bruteforce_oracle(ListConfiguration list, const RequestSequence& seq, CostModel model,
                                 std::size_t max_n) {
  if (seq.size() > max_n) {
    throw InstanceTooLarge("oracle limited to " + std::to_string(max_n) + " requests, got " +
                           std::to_string(seq.size()));
  }
  seq.validate_against(list);
  const std::vector<bool> moves = OracleSearch(seq, model).run(list);
  return simulate(std::move(list), seq, model,
                  [&moves](std::size_t index, std::size_t) { return static_cast<bool>(moves[index - 1]); });
}

CostReport run_algorithm(AlgorithmId id, const ListConfiguration& list, const RequestSequence& seq,
                         CostModel model, std::size_t oracle_max_n) {
  switch (id) {
    case AlgorithmId::MTF:
      return run_mtf(list, seq, model);
    case AlgorithmId::IMTF:
      return run_imtf(list, seq, model);
    case AlgorithmId::Static:
      return run_static(list, seq, model);
    case AlgorithmId::BruteForceOracle:
      return run_bruteforce_oracle(list, seq, model, oracle_max_n);
  }
  throw InvalidSpec("unknown algorithm id");
}

double gain(Cost c_mtf, Cost c_imtf) {
  if (c_mtf == 0) throw DivisionByZero("gain is undefined when the MTF cost is zero");
  return (static_cast<double>(c_mtf) - static_cast<double>(c_imtf)) / static_cast<double>(c_mtf) * 100.0;
}

}  // namespace listaccess
