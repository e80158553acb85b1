#include "ndsort/oracle.hpp"

#include <algorithm>

namespace ndsort {

RankAssignment sort_naive(const PointSet& points) {
    const std::size_t n = points.unique_count();
    const std::size_t m = points.objective_count();
    std::vector<std::int32_t> ranks(n, 0);

    // Any strict dominator of p precedes p lexicographically, so a single
    // forward scan over the sorted order evaluates the rank recurrence
    // tau(p) = max {0} u {1 + tau(q) | q dominates p} with all tau(q) final.
    const auto order = lex_sorted_order(points);
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = points.unique_point(static_cast<std::size_t>(order[i]));
        std::int32_t r = 0;
        for (std::size_t j = 0; j < i; ++j) {
            const auto q = points.unique_point(static_cast<std::size_t>(order[j]));
            if (dominates_strict(q, p, m)) {
                r = std::max(r, ranks[static_cast<std::size_t>(order[j])] + 1);
            }
        }
        ranks[static_cast<std::size_t>(order[i])] = r;
    }
    return points.broadcast_ranks(ranks);
}

std::int32_t count_levels(const RankAssignment& ranks) {
    if (ranks.ranks.empty()) return 0;
    return 1 + *std::max_element(ranks.ranks.begin(), ranks.ranks.end());
}

}  // namespace ndsort
