#pragma once

#include "ndsort/best_order_sort.hpp"
#include "ndsort/core.hpp"
#include "ndsort/divide_conquer.hpp"

#include <optional>
#include <utility>

namespace ndsort {

/// Parameters of the rule that routes divide-and-conquer subproblems to Best
/// Order Sort. With the defaults, a subproblem with n points and m active
/// objectives is delegated when
///   c_left * m * ln(m+1)  <=  n  <=  c_right * m * ((ln(d+1))^exponent - offset)
/// where d is either the subproblem's m or the original objective count.
struct SwitchPolicy {
    enum class DMode { SubproblemObjectives, OriginalObjectives };

    double c_left = 1.0;
    double c_right = 150.0;
    double exponent = 0.9;
    double offset = 1.5;
    DMode d_mode = DMode::SubproblemObjectives;
    bool enabled = true;
};

/// Lower and upper subproblem-size bounds for m active objectives; a
/// negative raw upper bound clamps to 0 (empty interval, never switch).
std::pair<double, double> switch_interval(std::size_t m, const SwitchPolicy& policy,
                                          std::size_t m_original);

/// True when a subproblem of n points and m active objectives should go to
/// Best Order Sort. Always false for m = 2: the sweeps beat Best Order Sort
/// under any conditions there.
bool should_switch(std::size_t n, std::size_t m, const SwitchPolicy& policy, std::size_t m_original);

/// Recursion delegate implementing the switch rule. Interval bounds are
/// memoized per active objective count, so the per-call check is O(1).
class SwitchDelegate final : public dc::RecursionDelegate {
public:
    SwitchDelegate(const SwitchPolicy& policy, std::size_t m_original)
        : policy_(policy), m_original_(m_original), memo_(m_original + 1) {}

    bool on_helper_a(std::span<const std::int32_t> s, std::size_t m, dc::WorkingState& state) override {
        if (!fires(s.size(), m)) return false;
        bos::helper_a(state.points(), s, m, state.ranks());
        return true;
    }

    bool on_helper_b(std::span<const std::int32_t> l, std::span<const std::int32_t> h,
                     std::size_t m, dc::WorkingState& state) override {
        if (!fires(l.size() + h.size(), m)) return false;
        bos::helper_b(state.points(), l, h, m, state.ranks());
        return true;
    }

    std::size_t delegated_calls() const { return delegated_; }

private:
    bool fires(std::size_t n, std::size_t m) {
        if (!policy_.enabled || m < 3) return false;
        auto& bounds = memo_[m];
        if (!bounds) bounds = switch_interval(m, policy_, m_original_);
        const auto size = static_cast<double>(n);
        const bool hit = bounds->first <= size && size <= bounds->second;
        delegated_ += hit ? 1 : 0;
        return hit;
    }

    SwitchPolicy policy_;
    std::size_t m_original_;
    std::vector<std::optional<std::pair<double, double>>> memo_;
    std::size_t delegated_ = 0;
};

/// Hybrid non-dominated sorting: divide-and-conquer outer recursion with
/// subproblems delegated to adapted Best Order Sort per the policy.
RankAssignment sort_hybrid(const PointSet& points, const SwitchPolicy& policy = {});

}  // namespace ndsort
