#include "ndsort/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ndsort {

bool dominates_weak(std::span<const double> a, std::span<const double> b, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

bool dominates_strict(std::span<const double> a, std::span<const double> b, std::size_t m) {
    bool strict = false;
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

std::strong_ordering lex_compare(std::span<const double> a, std::span<const double> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return std::strong_ordering::less;
        if (a[i] > b[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

RankAssignment PointSet::broadcast_ranks(std::span<const std::int32_t> unique_ranks) const {
    RankAssignment out;
    out.ranks.resize(group_of_.size());
    for (std::size_t i = 0; i < group_of_.size(); ++i) {
        out.ranks[i] = unique_ranks[static_cast<std::size_t>(group_of_[i])];
    }
    return out;
}

PointSet build_point_set(const std::vector<ObjectiveVector>& raw) {
    PointSet out;
    if (raw.empty()) return out;

    const std::size_t dim = raw.front().size();
    if (dim < 2) throw std::invalid_argument("objective vectors must have at least 2 components");
    for (const auto& v : raw) {
        if (v.size() != dim) throw std::invalid_argument("objective vectors must all have the same length");
        for (double x : v) {
            if (!std::isfinite(x)) throw std::invalid_argument("objective values must be finite");
        }
    }

    const std::size_t n = raw.size();
    std::vector<std::int32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        auto c = lex_compare(raw[static_cast<std::size_t>(a)], raw[static_cast<std::size_t>(b)]);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return a < b;  // keeps the first occurrence at the head of each run
    });

    // One representative per run of equal vectors, numbered by first occurrence.
    std::vector<std::int32_t> rep_original;
    std::vector<std::int32_t> run_rep(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        const auto& head = raw[static_cast<std::size_t>(order[i])];
        while (j < n && lex_compare(head, raw[static_cast<std::size_t>(order[j])]) == std::strong_ordering::equal) ++j;
        for (std::size_t k = i; k < j; ++k) run_rep[static_cast<std::size_t>(order[k])] = order[i];
        rep_original.push_back(order[i]);
        i = j;
    }
    std::sort(rep_original.begin(), rep_original.end());

    out.dim_ = dim;
    out.values_.reserve(rep_original.size() * dim);
    std::vector<std::int32_t> unique_index_of(n, -1);
    for (std::size_t u = 0; u < rep_original.size(); ++u) {
        unique_index_of[static_cast<std::size_t>(rep_original[u])] = static_cast<std::int32_t>(u);
        const auto& v = raw[static_cast<std::size_t>(rep_original[u])];
        out.values_.insert(out.values_.end(), v.begin(), v.end());
    }
    out.group_of_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.group_of_[k] = unique_index_of[static_cast<std::size_t>(run_rep[k])];
    }
    return out;
}

std::vector<std::int32_t> lex_sorted_order(const PointSet& points) {
    std::vector<std::int32_t> order(points.unique_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        return lex_compare(points.unique_point(static_cast<std::size_t>(a)),
                           points.unique_point(static_cast<std::size_t>(b))) == std::strong_ordering::less;
    });
    return order;
}

}  // namespace ndsort
