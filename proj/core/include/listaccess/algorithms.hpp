#pragma once

#include <cstddef>
#include <string_view>

#include "listaccess/cost_model.hpp"
#include "listaccess/list_configuration.hpp"
#include "listaccess/request_sequence.hpp"

namespace listaccess {

enum class AlgorithmId { MTF, IMTF, Static, BruteForceOracle };

std::string_view to_string(AlgorithmId id);

// Accepts "mtf", "imtf", "static" and "oracle" (case-insensitive).
AlgorithmId parse_algorithm(std::string_view text);

// The slice of the request sequence IMTF inspects after serving request
// `current_index` from list position i: the next i - 1 requests, truncated at
// the end of the sequence.
struct LookaheadWindow {
  std::size_t start_index = 0;  // 1-based, first request after the current one
  std::size_t length = 0;
};

// Throws PositionOutOfRange unless 1 <= current_index <= seq.size() and
// accessed_position >= 1.
LookaheadWindow lookahead_window(const RequestSequence& seq, std::size_t current_index,
                                 std::size_t accessed_position);

// True iff seq[current_index] reappears inside its lookahead window.
bool lookahead_hit(const RequestSequence& seq, std::size_t current_index, std::size_t accessed_position);

// Move-to-front: every accessed element goes to the head after being charged.
CostReport run_mtf(ListConfiguration list, const RequestSequence& seq, CostModel model);

// Improved move-to-front: the accessed element goes to the head only when it
// is requested again within the next i - 1 requests, i being the position it
// was found at. Otherwise the list is left alone.
CostReport run_imtf(ListConfiguration list, const RequestSequence& seq, CostModel model);

// Baseline that never reorganizes.
CostReport run_static(ListConfiguration list, const RequestSequence& seq, CostModel model);

inline constexpr std::size_t kDefaultOracleMaxN = 16;

// Exhaustive minimum over every per-access {stay, move-to-front} decision
// vector, free exchanges only. The returned report replays the cheapest
// vector found (ties keep the one with fewer early moves).
// Throws InstanceTooLarge when seq.size() > max_n.
CostReport run_bruteforce_oracle(ListConfiguration list, const RequestSequence& seq, CostModel model,
                                 std::size_t max_n = kDefaultOracleMaxN);

CostReport run_algorithm(AlgorithmId id, const ListConfiguration& list, const RequestSequence& seq,
                         CostModel model, std::size_t oracle_max_n = kDefaultOracleMaxN);

// Percentage cost reduction of IMTF relative to MTF:
// (c_mtf - c_imtf) / c_mtf * 100. Throws DivisionByZero when c_mtf == 0.
double gain(Cost c_mtf, Cost c_imtf);

}  // namespace listaccess
