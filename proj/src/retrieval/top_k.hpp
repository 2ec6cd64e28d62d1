#pragma once

#include <cstdint>
#include <vector>

#include "trialmatch/retrieval.hpp"

namespace trialmatch::detail {

struct Candidate {
  double score;
  std::uint32_t doc;
};

// Keeps the best k candidates in rank order.
void select_top_k(std::vector<Candidate>& candidates, const InvertedIndex& index, std::size_t k);
RankedList to_ranked(const std::vector<Candidate>& top, const InvertedIndex& index);

}  // namespace trialmatch::detail
