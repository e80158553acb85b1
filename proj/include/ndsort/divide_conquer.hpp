#pragma once

#include "ndsort/core.hpp"

#include <algorithm>
#include <functional>

namespace ndsort {
namespace dc {

class WorkingState;

/// Seam into the recursion: consulted before every helper_a / helper_b
/// invocation with the subproblem it is about to run. Returning true means
/// the delegate solved the subproblem itself and the recursion skips it.
class RecursionDelegate {
public:
    virtual ~RecursionDelegate() = default;
    virtual bool on_helper_a(std::span<const std::int32_t> s, std::size_t m, WorkingState& state) = 0;
    virtual bool on_helper_b(std::span<const std::int32_t> l, std::span<const std::int32_t> h,
                             std::size_t m, WorkingState& state) = 0;
};

/// Recycles index-list buffers across recursion nodes so the splits do not
/// hit the allocator once the recursion is warm.
class IndexPool {
public:
    std::vector<std::int32_t> acquire() {
        if (free_.empty()) return {};
        auto v = std::move(free_.back());
        free_.pop_back();
        v.clear();
        return v;
    }
    void release(std::vector<std::int32_t>&& v) { free_.push_back(std::move(v)); }

private:
    std::vector<std::vector<std::int32_t>> free_;
};

/// Mutable state of one sort run. Points are the unique points reordered
/// lexicographically; every index list handed to the helpers is an increasing
/// sequence of row indices, so index order doubles as lexicographic order.
/// Ranks hold the current lower bounds and only ever increase.
class WorkingState {
public:
    WorkingState(PointsView sorted_points, std::span<std::int32_t> ranks,
                 RecursionDelegate* delegate = nullptr)
        : points_(sorted_points), ranks_(ranks), delegate_(delegate) {}

    PointsView points() const { return points_; }
    std::span<const double> point(std::int32_t i) const { return points_.row(static_cast<std::size_t>(i)); }
    double objective(std::int32_t i, std::size_t j) const {
        return points_.data[static_cast<std::size_t>(i) * points_.dim + j];
    }

    std::int32_t rank(std::int32_t i) const { return ranks_[static_cast<std::size_t>(i)]; }
    void raise_rank(std::int32_t i, std::int32_t r) {
        auto& cur = ranks_[static_cast<std::size_t>(i)];
        if (r > cur) cur = r;
    }
    std::span<std::int32_t> ranks() { return ranks_; }

    RecursionDelegate* delegate() const { return delegate_; }

    IndexPool& pool() { return pool_; }
    std::vector<double>& median_scratch() { return median_scratch_; }

    /// Test-only observer of every rank-affecting comparison
    /// (dominator candidate, target, active objective count).
    std::function<void(std::int32_t, std::int32_t, std::size_t)> comparison_log;

private:
    PointsView points_;
    std::span<std::int32_t> ranks_;
    RecursionDelegate* delegate_ = nullptr;
    IndexPool pool_;
    std::vector<double> median_scratch_;
};

/// Staircase of per-level representative points for the 2-objective sweeps,
/// keyed by second objective. Keys and levels increase together, so the
/// greatest level whose representative dominates a query is a predecessor
/// search on the query's second objective. Stored flat: the staircase holds
/// one entry per live level, queries are binary searches, and every entry is
/// erased at most once over a sweep.
class LevelRepresentativeTree {
public:
    struct Hit {
        double key;
        std::int32_t level;
        std::int32_t point;
    };

    /// Greatest level whose representative has second objective <= y.
    const Hit* query(double y) const {
        auto it = upper_bound(y);
        if (it == reps_.begin()) return nullptr;
        return &*std::prev(it);
    }

    /// Makes `point` (second objective y) the representative of `level`.
    /// No-op when a representative with key <= y already covers an
    /// equal-or-higher level; prunes representatives it supersedes.
    void insert(double y, std::int32_t level, std::int32_t point) {
        auto it = upper_bound(y);
        if (it != reps_.begin()) {
            auto prev = std::prev(it);
            if (prev->level >= level) return;
            if (prev->key == y) --it;  // same key, lower level: replace in place
        }
        auto run_end = it;
        while (run_end != reps_.end() && run_end->level <= level) ++run_end;
        if (it == run_end) {
            reps_.insert(it, Hit{y, level, point});
        } else {
            *it = Hit{y, level, point};
            reps_.erase(it + 1, run_end);
        }
    }

    std::size_t size() const { return reps_.size(); }
    void clear() { reps_.clear(); }

    bool staircase_ok() const {
        for (std::size_t i = 1; i < reps_.size(); ++i) {
            if (reps_[i].level <= reps_[i - 1].level) return false;
            if (reps_[i].key <= reps_[i - 1].key) return false;
        }
        return true;
    }

private:
    std::vector<Hit>::iterator upper_bound(double y) {
        return std::upper_bound(reps_.begin(), reps_.end(), y,
                                [](double v, const Hit& h) { return v < h.key; });
    }
    std::vector<Hit>::const_iterator upper_bound(double y) const {
        return std::upper_bound(reps_.begin(), reps_.end(), y,
                                [](double v, const Hit& h) { return v < h.key; });
    }

    std::vector<Hit> reps_;
};

/// Finalizes ranks within `s` with respect to the first m objectives.
/// Requires: `s` increasing (lexicographically sorted) and every comparison
/// between `s` and outside points already performed.
void helper_a(std::span<const std::int32_t> s, std::size_t m, WorkingState& state);

/// Updates ranks of `h` using the finalized set `l` and the first m
/// objectives. Requires: ranks of `l` final, and every l weakly dominating
/// every h on objectives beyond m.
void helper_b(std::span<const std::int32_t> l, std::span<const std::int32_t> h,
              std::size_t m, WorkingState& state);

/// 2-objective sweep finalizing ranks within `s` (lex-sorted).
void sweep_a(std::span<const std::int32_t> s, WorkingState& state);

/// 2-objective sweep updating `h` from finalized `l`; the merged sequence is
/// processed in lexicographic order, l-points feed the tree, h-points query.
void sweep_b(std::span<const std::int32_t> l, std::span<const std::int32_t> h, WorkingState& state);

struct MedianSplit {
    std::vector<std::int32_t> low, mid, high;
};

/// The n/2-th order statistic of objective `j` over `range`.
double median_objective_value(PointsView pts, std::span<const std::int32_t> range, std::size_t j);

/// Stable three-way partition of `range` by `pivot` on objective `j`;
/// relative (lexicographic) order is preserved inside each part.
MedianSplit split_by_value(PointsView pts, std::span<const std::int32_t> range, std::size_t j, double pivot);

/// split_by_value at the median. Requires at least two distinct values of
/// objective `j` in `range` so that low and high are strictly smaller than
/// the input.
MedianSplit split_by_median(PointsView pts, std::span<const std::int32_t> range, std::size_t j);

/// Runs the full recursion with `delegate` installed on the seam.
RankAssignment sort_with_delegate(const PointSet& points, RecursionDelegate* delegate);

}  // namespace dc

/// Divide-and-conquer non-dominated sorting: lexicographic sort, helper_a
/// over all unique points with m = M, ranks broadcast to duplicates.
RankAssignment sort_dc(const PointSet& points);

}  // namespace ndsort
