#ifndef ROBUSTCOLOR_LIST_COLORING_HPP
#define ROBUSTCOLOR_LIST_COLORING_HPP

#include "robustcolor/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace robustcolor {

// Small list-coloring instance over vertices 0..n-1: assign each vertex a
// color from its candidate list so that no conflict edge is monochromatic.
// adjacency holds each undirected conflict edge in both directions.
struct ListColoringInstance {
    std::vector<std::vector<std::uint32_t>> adjacency;
    std::vector<std::vector<std::int32_t>> lists;
};

struct ListColoringLimits {
    int greedy_retries = 8;            // fresh random orders before backtracking
    std::uint64_t node_budget = 1000000; // backtracking expansion cap
};

// Returns one chosen color per vertex; throws ListColoringFailed when every
// greedy retry and the capped backtracking search fail.
std::vector<std::int32_t> solve_list_coloring(const ListColoringInstance& inst,
    std::mt19937_64& rng, const ListColoringLimits& limits = {});

} // namespace robustcolor

#endif
