#pragma once

// Shared fixtures: random instance generators and the independent brute-force
// oracles the algorithm tests check against. Everything here must stay
// independent of the implementation paths under test.

#include "ndsort/best_order_sort.hpp"
#include "ndsort/core.hpp"
#include "ndsort/divide_conquer.hpp"
#include "ndsort/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace ndtest {

/// Adversarial switch rule: a seeded coin flip before every subproblem.
struct RandomSwitchDelegate final : ndsort::dc::RecursionDelegate {
    std::mt19937_64 rng;
    explicit RandomSwitchDelegate(std::uint64_t seed) : rng(seed) {}

    bool on_helper_a(std::span<const std::int32_t> s, std::size_t m,
                     ndsort::dc::WorkingState& state) override {
        if (m >= 3 && rng() % 2 == 0) {
            ndsort::bos::helper_a(state.points(), s, m, state.ranks());
            return true;
        }
        return false;
    }
    bool on_helper_b(std::span<const std::int32_t> l, std::span<const std::int32_t> h, std::size_t m,
                     ndsort::dc::WorkingState& state) override {
        if (m >= 3 && rng() % 2 == 0) {
            ndsort::bos::helper_b(state.points(), l, h, m, state.ranks());
            return true;
        }
        return false;
    }
};

using ndsort::ObjectiveVector;
using ndsort::PointsView;

inline double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::vector<ObjectiveVector> random_continuous(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::vector<ObjectiveVector> out(n, ObjectiveVector(m));
    for (auto& row : out) {
        for (auto& x : row) x = unit_draw(rng);
    }
    return out;
}

/// Small-integer alphabet with heavy duplicate coordinates and points.
inline std::vector<ObjectiveVector> random_integer_grid(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                                        int alphabet = 3) {
    std::vector<ObjectiveVector> out(n, ObjectiveVector(m));
    for (auto& row : out) {
        for (auto& x : row) x = static_cast<double>(rng() % static_cast<std::uint64_t>(alphabet));
    }
    return out;
}

/// Rank recurrence on a point subset with incoming lower bounds, strict
/// dominance restricted to the first m objectives. Dominators precede their
/// targets in index order, so one forward pass settles the recurrence.
inline std::vector<std::int32_t> within_set_oracle(PointsView pts, std::span<const std::int32_t> s,
                                                   std::size_t m, std::span<const std::int32_t> bounds) {
    std::vector<std::int32_t> out(bounds.begin(), bounds.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (ndsort::dominates_strict(pts.row(static_cast<std::size_t>(s[j])),
                                         pts.row(static_cast<std::size_t>(s[i])), m)) {
                out[i] = std::max(out[i], out[j] + 1);
            }
        }
    }
    return out;
}

/// The two-set update: for each h, max(incoming bound, 1 + max rank over the
/// l that weakly dominate it on the first m objectives).
inline std::vector<std::int32_t> two_set_oracle(PointsView pts, std::span<const std::int32_t> l,
                                                std::span<const std::int32_t> h, std::size_t m,
                                                std::span<const std::int32_t> l_ranks,
                                                std::span<const std::int32_t> h_bounds) {
    std::vector<std::int32_t> out(h_bounds.begin(), h_bounds.end());
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = 0; j < l.size(); ++j) {
            if (ndsort::dominates_weak(pts.row(static_cast<std::size_t>(l[j])),
                                       pts.row(static_cast<std::size_t>(h[i])), m)) {
                out[i] = std::max(out[i], l_ranks[j] + 1);
            }
        }
    }
    return out;
}

/// Owns a lexicographically sorted point matrix plus a rank buffer, the
/// setup the divide-and-conquer helpers expect.
struct SortedFixture {
    std::vector<double> values;
    std::size_t n = 0;
    std::size_t dim = 0;
    std::vector<std::int32_t> ranks;
    std::vector<std::int32_t> all;  // 0..n-1

    explicit SortedFixture(std::vector<ObjectiveVector> rows, std::vector<std::int32_t> bounds = {}) {
        std::sort(rows.begin(), rows.end());
        n = rows.size();
        dim = n == 0 ? 0 : rows.front().size();
        values.reserve(n * dim);
        for (const auto& row : rows) values.insert(values.end(), row.begin(), row.end());
        ranks = bounds.empty() ? std::vector<std::int32_t>(n, 0) : std::move(bounds);
        all.resize(n);
        std::iota(all.begin(), all.end(), 0);
    }

    PointsView view() const { return {values.data(), n, dim}; }
    ndsort::dc::WorkingState state(ndsort::dc::RecursionDelegate* delegate = nullptr) {
        return {view(), ranks, delegate};
    }
};

/// Enumerates all multisets of the given alphabet up to `max_size`, invoking
/// the callback with each instance.
template <typename Callback>
void for_each_multiset(const std::vector<ObjectiveVector>& alphabet, std::size_t max_size, Callback&& cb) {
    std::vector<ObjectiveVector> current;
    auto recurse = [&](auto&& self, std::size_t from) -> void {
        if (!current.empty()) cb(current);
        if (current.size() == max_size) return;
        for (std::size_t i = from; i < alphabet.size(); ++i) {
            current.push_back(alphabet[i]);
            self(self, i);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
}

/// {0,1,...,alphabet-1}^dim as vectors.
inline std::vector<ObjectiveVector> cube_alphabet(int values, std::size_t dim) {
    std::vector<ObjectiveVector> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= static_cast<std::size_t>(values);
    for (std::size_t code = 0; code < total; ++code) {
        ObjectiveVector v(dim);
        std::size_t rest = code;
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = static_cast<double>(rest % static_cast<std::size_t>(values));
            rest /= static_cast<std::size_t>(values);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace ndtest
