#include "ndsort/divide_conquer.hpp"

#include <algorithm>
#include <numeric>

namespace ndsort {
namespace dc {
namespace {

void log_comparison(WorkingState& state, std::int32_t dominator, std::int32_t target, std::size_t m) {
    if (state.comparison_log) state.comparison_log(dominator, target, m);
}

// Direct comparison branch shared by the tiny helper_a / helper_b cases:
// weak dominance on the first m objectives is enough, the caller guarantees
// the remaining objectives.
void pairwise_update(std::int32_t lo, std::int32_t hi, std::size_t m, WorkingState& state) {
    log_comparison(state, lo, hi, m);
    if (dominates_weak(state.point(lo), state.point(hi), m)) {
        state.raise_rank(hi, state.rank(lo) + 1);
    }
}

std::vector<std::int32_t> merge_index_lists(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
    std::vector<std::int32_t> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool all_equal_on(PointsView pts, std::span<const std::int32_t> range, std::size_t j) {
    const double first = pts.data[static_cast<std::size_t>(range.front()) * pts.dim + j];
    for (std::int32_t i : range) {
        if (pts.data[static_cast<std::size_t>(i) * pts.dim + j] != first) return false;
    }
    return true;
}

}  // namespace

void sweep_a(std::span<const std::int32_t> s, WorkingState& state) {
    LevelRepresentativeTree tree;
    for (std::int32_t i : s) {
        const double y = state.objective(i, 1);
        if (const auto* hit = tree.query(y)) {
            log_comparison(state, hit->point, i, 2);
            state.raise_rank(i, hit->level + 1);
        }
        tree.insert(y, state.rank(i), i);
    }
}

void sweep_b(std::span<const std::int32_t> l, std::span<const std::int32_t> h, WorkingState& state) {
    LevelRepresentativeTree tree;
    std::size_t li = 0, hi = 0;
    while (hi < h.size()) {
        if (li < l.size() && l[li] < h[hi]) {
            tree.insert(state.objective(l[li], 1), state.rank(l[li]), l[li]);
            ++li;
        } else {
            if (const auto* hit = tree.query(state.objective(h[hi], 1))) {
                log_comparison(state, hit->point, h[hi], 2);
                state.raise_rank(h[hi], hit->level + 1);
            }
            ++hi;
        }
    }
}

double median_objective_value(PointsView pts, std::span<const std::int32_t> range, std::size_t j) {
    std::vector<double> values;
    values.reserve(range.size());
    for (std::int32_t i : range) values.push_back(pts.data[static_cast<std::size_t>(i) * pts.dim + j]);
    auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
    std::nth_element(values.begin(), mid, values.end());
    return *mid;
}

MedianSplit split_by_value(PointsView pts, std::span<const std::int32_t> range, std::size_t j, double pivot) {
    MedianSplit out;
    for (std::int32_t i : range) {
        const double v = pts.data[static_cast<std::size_t>(i) * pts.dim + j];
        if (v < pivot) {
            out.low.push_back(i);
        } else if (v > pivot) {
            out.high.push_back(i);
        } else {
            out.mid.push_back(i);
        }
    }
    return out;
}

MedianSplit split_by_median(PointsView pts, std::span<const std::int32_t> range, std::size_t j) {
    return split_by_value(pts, range, j, median_objective_value(pts, range, j));
}

void helper_a(std::span<const std::int32_t> s, std::size_t m, WorkingState& state) {
    if (auto* d = state.delegate(); d && d->on_helper_a(s, m, state)) return;
    if (s.size() <= 1) return;
    if (s.size() == 2) {
        pairwise_update(s[0], s[1], m, state);
        return;
    }
    if (m == 2) {
        sweep_a(s, state);
        return;
    }
    const std::size_t j = m - 1;  // objective m, 0-based column
    if (all_equal_on(state.points(), s, j)) {
        helper_a(s, m - 1, state);
        return;
    }
    const MedianSplit split = split_by_median(state.points(), s, j);
    helper_a(split.low, m, state);
    helper_b(split.low, split.mid, m - 1, state);
    helper_a(split.mid, m - 1, state);
    const auto low_mid = merge_index_lists(split.low, split.mid);
    helper_b(low_mid, split.high, m - 1, state);
    helper_a(split.high, m, state);
}

void helper_b(std::span<const std::int32_t> l, std::span<const std::int32_t> h,
              std::size_t m, WorkingState& state) {
    if (auto* d = state.delegate(); d && d->on_helper_b(l, h, m, state)) return;
    if (l.empty() || h.empty()) return;
    if (l.size() == 1 || h.size() == 1) {
        for (std::int32_t li : l) {
            for (std::int32_t hi : h) pairwise_update(li, hi, m, state);
        }
        return;
    }
    if (m == 2) {
        sweep_b(l, h, state);
        return;
    }
    const std::size_t j = m - 1;
    double max_l = state.objective(l[0], j);
    for (std::int32_t i : l) max_l = std::max(max_l, state.objective(i, j));
    double min_h = state.objective(h[0], j);
    for (std::int32_t i : h) min_h = std::min(min_h, state.objective(i, j));
    if (max_l <= min_h) {
        helper_b(l, h, m - 1, state);
        return;
    }

    const auto merged = merge_index_lists(l, h);
    const double pivot = median_objective_value(state.points(), merged, j);
    const MedianSplit ls = split_by_value(state.points(), l, j, pivot);
    const MedianSplit hs = split_by_value(state.points(), h, j, pivot);
    helper_b(ls.low, hs.low, m, state);
    helper_b(ls.low, hs.mid, m - 1, state);
    helper_b(ls.mid, hs.mid, m - 1, state);
    const auto l_low_mid = merge_index_lists(ls.low, ls.mid);
    helper_b(l_low_mid, hs.high, m - 1, state);
    helper_b(ls.high, hs.high, m, state);
}

RankAssignment sort_with_delegate(const PointSet& points, RecursionDelegate* delegate) {
    const std::size_t n = points.unique_count();
    if (n == 0) return {};

    const auto order = lex_sorted_order(points);
    const std::size_t dim = points.objective_count();
    std::vector<double> sorted_values(n * dim);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = points.unique_point(static_cast<std::size_t>(order[i]));
        std::copy(row.begin(), row.end(), sorted_values.begin() + static_cast<std::ptrdiff_t>(i * dim));
    }

    std::vector<std::int32_t> ranks(n, 0);
    WorkingState state({sorted_values.data(), n, dim}, ranks, delegate);
    std::vector<std::int32_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    helper_a(all, dim, state);

    std::vector<std::int32_t> unique_ranks(n);
    for (std::size_t i = 0; i < n; ++i) unique_ranks[static_cast<std::size_t>(order[i])] = ranks[i];
    return points.broadcast_ranks(unique_ranks);
}

}  // namespace dc

RankAssignment sort_dc(const PointSet& points) {
    return dc::sort_with_delegate(points, nullptr);
}

}  // namespace ndsort
