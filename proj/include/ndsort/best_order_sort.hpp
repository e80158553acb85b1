#pragma once

#include "ndsort/core.hpp"

#include <functional>

namespace ndsort {

/// Counters exposed for instrumentation; every point must be ranked as
/// "new" exactly once before the scan stops.
struct BosStats {
    std::size_t first_processed = 0;
    std::size_t positions_scanned = 0;

    /// Optional event taps for tests; point arguments are view row indices.
    /// on_processed_in_list fires when a point is inserted into an
    /// objective's rank lists (the moment that objective leaves its set);
    /// on_first_processed fires when a point's rank is determined.
    std::function<void(std::int32_t, std::size_t)> on_processed_in_list;
    std::function<void(std::int32_t)> on_first_processed;
};

/// Best Order Sort: per-objective sorted lists processed round-robin, with
/// shrinking per-point objective sets and per-rank candidate lists.
RankAssignment sort_bos(const PointSet& points, BosStats* stats = nullptr);

namespace bos {

/// Per-point sets of objectives still relevant when testing whether that
/// point dominates a later one. Objective j leaves point i's set once i has
/// been processed in the list sorted by j; every later new point is known to
/// be no better in j. Sets only shrink.
class ConsiderMasks {
public:
    ConsiderMasks(std::size_t n_points, std::size_t n_objectives)
        : words_per_point_((n_objectives + 63) / 64),
          words_(n_points * words_per_point_, 0) {
        for (std::size_t i = 0; i < n_points; ++i) {
            for (std::size_t j = 0; j < n_objectives; ++j) set(i, j);
        }
    }

    void set(std::size_t point, std::size_t j) {
        words_[point * words_per_point_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }
    void remove(std::size_t point, std::size_t j) {
        words_[point * words_per_point_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
    }
    bool contains(std::size_t point, std::size_t j) const {
        return (words_[point * words_per_point_ + j / 64] >> (j % 64)) & 1;
    }

    /// Weak dominance of `candidate` over `query` on the candidate's mask.
    /// An empty mask dominates vacuously: every masked-out objective was
    /// already certified no-worse by list order.
    bool mask_dominates(PointsView pts, std::int32_t candidate, std::span<const double> query) const;

private:
    std::size_t words_per_point_;
    std::vector<std::uint64_t> words_;
};

/// Per-rank lists of already-processed points for one objective.
using RankLists = std::vector<std::vector<std::int32_t>>;

/// Smallest r >= start_rank such that no point in lists[r] dominates `query`
/// on its consider mask: a linear scan that starts at the incoming lower
/// bound, so non-zero bounds cost nothing extra.
std::int32_t find_rank(PointsView pts, std::span<const double> query, std::int32_t start_rank,
                       const RankLists& lists, const ConsiderMasks& masks);

/// Finalizes ranks of `s` with respect to the first m objectives; incoming
/// ranks are valid lower bounds and only increase. Backend for the
/// divide-and-conquer helper_a role.
void helper_a(PointsView pts, std::span<const std::int32_t> s, std::size_t m,
              std::span<std::int32_t> ranks, BosStats* stats = nullptr);

/// Updates ranks of `h` from the finalized set `l` on the first m
/// objectives: l-points enter rank lists without a rank lookup, h-points
/// look ranks up without ever entering the lists. Backend for the helper_b
/// role; requires every l to weakly dominate every h on objectives past m.
void helper_b(PointsView pts, std::span<const std::int32_t> l, std::span<const std::int32_t> h,
              std::size_t m, std::span<std::int32_t> ranks, BosStats* stats = nullptr);

}  // namespace bos
}  // namespace ndsort
