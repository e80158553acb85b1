#include "ndsort/best_order_sort.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ndsort {
namespace bos {

bool ConsiderMasks::mask_dominates(PointsView pts, std::int32_t candidate, std::span<const double> query) const {
    const double* row = pts.data + static_cast<std::size_t>(candidate) * pts.dim;
    const std::uint64_t* w = words_.data() + static_cast<std::size_t>(candidate) * words_per_point_;
    for (std::size_t wi = 0; wi < words_per_point_; ++wi) {
        std::uint64_t bits = w[wi];
        while (bits != 0) {
            const std::size_t j = wi * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            if (row[j] > query[j]) return false;
            bits &= bits - 1;
        }
    }
    return true;
}

std::int32_t find_rank(PointsView pts, std::span<const double> query, std::int32_t start_rank,
                       const RankLists& lists, const ConsiderMasks& masks) {
    std::size_t r = static_cast<std::size_t>(std::max(start_rank, 0));
    while (r < lists.size()) {
        bool dominated = false;
        for (std::int32_t candidate : lists[r]) {
            if (masks.mask_dominates(pts, candidate, query)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) break;
        ++r;
    }
    return static_cast<std::int32_t>(r);
}

namespace {

// One scan engine backs all three entry points. The working points are
// gathered into a dense n x m matrix so that list indices, consider masks
// and rank lists all live in one compact index space.
class Engine {
public:
    Engine(PointsView base, std::span<const std::int32_t> sources, std::span<const std::int32_t> targets,
           bool sources_enter_only, std::size_t m, std::span<std::int32_t> ranks)
        : m_(m),
          n_(sources.size() + targets.size()),
          two_set_(sources_enter_only),
          values_(n_ * m),
          local_rank_(n_),
          origin_(n_),
          masks_(n_, m) {
        std::size_t w = 0;
        for (std::int32_t g : sources) gather(base, g, ranks, w++);
        for (std::int32_t g : targets) gather(base, g, ranks, w++);
        n_sources_ = sources.size();
    }

    PointsView local_view() const { return {values_.data(), n_, m_}; }
    std::span<const double> local_row(std::size_t w) const { return {values_.data() + w * m_, m_}; }

    void run(std::span<std::int32_t> ranks, BosStats* stats) {
        const std::size_t target_total = two_set_ ? n_ - n_sources_ : n_;
        if (target_total == 0 || n_ == 0) return;

        build_lists();
        std::vector<RankLists> rank_lists(m_);
        std::vector<bool> processed(n_, false);
        std::size_t done = 0;
        std::size_t positions = 0;

        for (std::size_t pos = 0; pos < n_ && done < target_total; ++pos) {
            ++positions;
            for (std::size_t j = 0; j < m_ && done < target_total; ++j) {
                const std::int32_t w = lists_[j][pos];
                const bool is_source_only = two_set_ && static_cast<std::size_t>(w) < n_sources_;
                if (is_source_only) {
                    insert(rank_lists[j], w, local_rank_[static_cast<std::size_t>(w)]);
                    masks_.remove(static_cast<std::size_t>(w), j);
                    if (stats && stats->on_processed_in_list) stats->on_processed_in_list(origin_[static_cast<std::size_t>(w)], j);
                    continue;
                }
                if (!processed[static_cast<std::size_t>(w)]) {
                    const std::int32_t r = find_rank(local_view(), local_row(static_cast<std::size_t>(w)),
                                                     local_rank_[static_cast<std::size_t>(w)], rank_lists[j], masks_);
                    local_rank_[static_cast<std::size_t>(w)] = r;
                    processed[static_cast<std::size_t>(w)] = true;
                    ++done;
                    if (stats && stats->on_first_processed) stats->on_first_processed(origin_[static_cast<std::size_t>(w)]);
                    if (!two_set_) {
                        insert(rank_lists[j], w, r);
                        masks_.remove(static_cast<std::size_t>(w), j);
                        if (stats && stats->on_processed_in_list) stats->on_processed_in_list(origin_[static_cast<std::size_t>(w)], j);
                    }
                } else if (!two_set_) {
                    insert(rank_lists[j], w, local_rank_[static_cast<std::size_t>(w)]);
                    masks_.remove(static_cast<std::size_t>(w), j);
                    if (stats && stats->on_processed_in_list) stats->on_processed_in_list(origin_[static_cast<std::size_t>(w)], j);
                }
            }
        }

        // Only targets are written back; source ranks were final on entry.
        for (std::size_t w = two_set_ ? n_sources_ : 0; w < n_; ++w) {
            ranks[static_cast<std::size_t>(origin_[w])] = local_rank_[w];
        }
        if (stats != nullptr) {
            stats->first_processed += done;
            stats->positions_scanned += positions;
        }
    }

private:
    void gather(PointsView base, std::int32_t g, std::span<const std::int32_t> ranks, std::size_t w) {
        const double* src = base.data + static_cast<std::size_t>(g) * base.dim;
        std::copy(src, src + m_, values_.begin() + static_cast<std::ptrdiff_t>(w * m_));
        local_rank_[w] = ranks[static_cast<std::size_t>(g)];
        origin_[w] = g;
    }

    void build_lists() {
        lists_.assign(m_, {});
        std::vector<std::int32_t> base_order(n_);
        std::iota(base_order.begin(), base_order.end(), 0);
        for (std::size_t j = 0; j < m_; ++j) {
            auto& list = lists_[j];
            list = base_order;
            std::sort(list.begin(), list.end(), [&](std::int32_t a, std::int32_t b) {
                const auto wa = static_cast<std::size_t>(a), wb = static_cast<std::size_t>(b);
                const double va = values_[wa * m_ + j], vb = values_[wb * m_ + j];
                if (va != vb) return va < vb;
                const auto c = lex_compare(local_row(wa), local_row(wb));
                if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
                // equal projections: sources ahead of targets, then stable
                const bool a_src = two_set_ && wa < n_sources_;
                const bool b_src = two_set_ && wb < n_sources_;
                if (a_src != b_src) return a_src;
                return a < b;
            });
        }
    }

    static void insert(RankLists& lists, std::int32_t w, std::int32_t r) {
        if (lists.size() <= static_cast<std::size_t>(r)) lists.resize(static_cast<std::size_t>(r) + 1);
        lists[static_cast<std::size_t>(r)].push_back(w);
    }

    std::size_t m_;
    std::size_t n_;
    std::size_t n_sources_ = 0;
    bool two_set_;
    std::vector<double> values_;
    std::vector<std::int32_t> local_rank_;
    std::vector<std::int32_t> origin_;
    ConsiderMasks masks_;
    std::vector<std::vector<std::int32_t>> lists_;
};

}  // namespace

void helper_a(PointsView pts, std::span<const std::int32_t> s, std::size_t m,
              std::span<std::int32_t> ranks, BosStats* stats) {
    if (s.empty()) return;
    Engine engine(pts, {}, s, false, m, ranks);
    engine.run(ranks, stats);
}

void helper_b(PointsView pts, std::span<const std::int32_t> l, std::span<const std::int32_t> h,
              std::size_t m, std::span<std::int32_t> ranks, BosStats* stats) {
    if (l.empty() || h.empty()) return;
    Engine engine(pts, l, h, true, m, ranks);
    engine.run(ranks, stats);
}

}  // namespace bos

RankAssignment sort_bos(const PointSet& points, BosStats* stats) {
    const std::size_t n = points.unique_count();
    if (n == 0) return {};
    std::vector<std::int32_t> work(n);
    std::iota(work.begin(), work.end(), 0);
    std::vector<std::int32_t> ranks(n, 0);
    bos::helper_a(points.view(), work, points.objective_count(), ranks, stats);
    return points.broadcast_ranks(ranks);
}

}  // namespace ndsort
