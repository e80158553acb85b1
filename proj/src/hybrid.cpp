#include "ndsort/hybrid.hpp"

#include <algorithm>
#include <cmath>

namespace ndsort {

std::pair<double, double> switch_interval(std::size_t m, const SwitchPolicy& policy,
                                          std::size_t m_original) {
    const auto md = static_cast<double>(m);
    const double d = policy.d_mode == SwitchPolicy::DMode::SubproblemObjectives
                         ? md
                         : static_cast<double>(m_original);
    const double n_min = policy.c_left * md * std::log(md + 1.0);
    const double n_max =
        std::max(0.0, policy.c_right * md * (std::pow(std::log(d + 1.0), policy.exponent) - policy.offset));
    return {n_min, n_max};
}

bool should_switch(std::size_t n, std::size_t m, const SwitchPolicy& policy, std::size_t m_original) {
    if (!policy.enabled || m < 3) return false;
    const auto [n_min, n_max] = switch_interval(m, policy, m_original);
    const auto size = static_cast<double>(n);
    return n_min <= size && size <= n_max;
}

RankAssignment sort_hybrid(const PointSet& points, const SwitchPolicy& policy) {
    SwitchDelegate delegate(policy, points.objective_count());
    return dc::sort_with_delegate(points, &delegate);
}

}  // namespace ndsort
