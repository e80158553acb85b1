#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ndsort {

/// One point in objective space. Minimization orientation: smaller is better
/// in every coordinate. Callers with maximization objectives negate them.
using ObjectiveVector = std::vector<double>;

/// Read-only view of a row-major [count x dim] block of objective values.
struct PointsView {
    const double* data = nullptr;
    std::size_t count = 0;
    std::size_t dim = 0;

    std::span<const double> row(std::size_t i) const { return {data + i * dim, dim}; }
};

/// Weak Pareto dominance on the first `m` objectives: a_i <= b_i for all i < m.
bool dominates_weak(std::span<const double> a, std::span<const double> b, std::size_t m);

/// Strict Pareto dominance on the first `m` objectives: a_i <= b_i for all
/// i < m and a_i < b_i for at least one.
bool dominates_strict(std::span<const double> a, std::span<const double> b, std::size_t m);

/// Lexicographic order over all objectives, first objective most significant.
std::strong_ordering lex_compare(std::span<const double> a, std::span<const double> b);

/// The result of non-dominated sorting: one rank per original input point.
/// Rank 0 is the non-dominated front; rank r+1 points are dominated only by
/// points of rank <= r, with at least one rank-r dominator.
struct RankAssignment {
    std::vector<std::int32_t> ranks;

    bool operator==(const RankAssignment&) const = default;
};

/// A deduplicated point collection. Componentwise-equal input points are
/// collapsed into one unique representative; `group_of` maps every original
/// input index to its representative so ranks computed on unique points can
/// be broadcast back. Unique points keep first-occurrence order.
class PointSet {
public:
    PointSet() = default;

    std::size_t unique_count() const { return values_.size() / std::max<std::size_t>(dim_, 1); }
    std::size_t original_count() const { return group_of_.size(); }
    std::size_t objective_count() const { return dim_; }

    std::span<const double> unique_point(std::size_t i) const { return {values_.data() + i * dim_, dim_}; }
    PointsView view() const { return {values_.data(), unique_count(), dim_}; }
    std::span<const std::int32_t> group_of() const { return group_of_; }

    /// Expands per-unique-point ranks to one rank per original input point.
    RankAssignment broadcast_ranks(std::span<const std::int32_t> unique_ranks) const;

    friend PointSet build_point_set(const std::vector<ObjectiveVector>& raw);

private:
    std::vector<double> values_;           // row-major, unique points only
    std::vector<std::int32_t> group_of_;   // original index -> unique index
    std::size_t dim_ = 0;
};

/// Validates and deduplicates raw input vectors.
/// Throws std::invalid_argument on mismatched lengths, length < 2, or
/// non-finite values.
PointSet build_point_set(const std::vector<ObjectiveVector>& raw);

/// Indices of unique points in lexicographic order.
std::vector<std::int32_t> lex_sorted_order(const PointSet& points);

}  // namespace ndsort
