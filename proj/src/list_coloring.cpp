#include "robustcolor/list_coloring.hpp"

#include <algorithm>
#include <numeric>

namespace robustcolor {

namespace {

    bool greedy_attempt(const ListColoringInstance& inst,
        const std::vector<std::uint32_t>& order, std::vector<std::int32_t>& out)
    {
        std::fill(out.begin(), out.end(), 0);
        for (std::uint32_t v : order) {
            std::int32_t chosen = 0;
            for (std::int32_t cand : inst.lists[v]) {
                bool clash = false;
                for (std::uint32_t w : inst.adjacency[v]) {
                    if (out[w] == cand) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) {
                    chosen = cand;
                    break;
                }
            }
            if (chosen == 0)
                return false;
            out[v] = chosen;
        }
        return true;
    }

    bool backtrack(const ListColoringInstance& inst,
        const std::vector<std::uint32_t>& order, std::size_t pos,
        std::vector<std::int32_t>& out, std::uint64_t& budget)
    {
        if (pos == order.size())
            return true;
        std::uint32_t v = order[pos];
        for (std::int32_t cand : inst.lists[v]) {
            if (budget == 0)
                return false;
            --budget;
            bool clash = false;
            for (std::uint32_t w : inst.adjacency[v]) {
                if (out[w] == cand) {
                    clash = true;
                    break;
                }
            }
            if (clash)
                continue;
            out[v] = cand;
            if (backtrack(inst, order, pos + 1, out, budget))
                return true;
            out[v] = 0;
        }
        return false;
    }

} // namespace

std::vector<std::int32_t> solve_list_coloring(const ListColoringInstance& inst,
    std::mt19937_64& rng, const ListColoringLimits& limits)
{
    const std::size_t n = inst.lists.size();
    for (std::size_t v = 0; v < n; ++v)
        if (inst.lists[v].empty())
            throw ListColoringFailed("vertex " + std::to_string(v) + " has an empty list");

    std::vector<std::int32_t> out(n, 0);
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);

    for (int attempt = 0; attempt < limits.greedy_retries; ++attempt) {
        std::shuffle(order.begin(), order.end(), rng);
        if (greedy_attempt(inst, order, out))
            return out;
    }

    // Most-constrained-first helps the capped exact search.
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return inst.adjacency[a].size() > inst.adjacency[b].size();
    });
    std::fill(out.begin(), out.end(), 0);
    std::uint64_t budget = limits.node_budget;
    if (backtrack(inst, order, 0, out, budget))
        return out;

    throw ListColoringFailed("list coloring unsolved after "
        + std::to_string(limits.greedy_retries) + " greedy orders and "
        + std::to_string(limits.node_budget) + " backtracking expansions");
}

} // namespace robustcolor
