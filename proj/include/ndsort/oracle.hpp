#pragma once

#include "ndsort/core.hpp"

namespace ndsort {

/// Definition-level non-dominated sorting in O(N^2 M). Deliberately plain;
/// this is the trusted reference the other algorithms are checked against.
RankAssignment sort_naive(const PointSet& points);

/// Number of non-domination levels: 1 + max rank (0 for an empty assignment).
std::int32_t count_levels(const RankAssignment& ranks);

}  // namespace ndsort
