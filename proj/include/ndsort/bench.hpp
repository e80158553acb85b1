#pragma once

#include "ndsort/core.hpp"
#include "ndsort/datagen.hpp"
#include "ndsort/hybrid.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ndsort::bench {

/// Benchmark point counts floor(10^(n/4)) for integer n in [n_lo, n_hi].
std::vector<std::size_t> grid_sizes(int n_lo, int n_hi);

enum class Algo { Naive, Bos, Dc, Hybrid };

std::string_view algo_name(Algo algo);
std::optional<Algo> algo_from_name(std::string_view name);

/// FNV-1a over the rank sequence; equal across algorithms iff the rank
/// assignments agree.
std::uint64_t rank_checksum(const RankAssignment& ranks);

/// Deterministic per-trial seed so grids are reproducible without storing
/// datasets.
std::uint64_t derive_seed(std::uint64_t base, std::size_t n, std::size_t m, std::size_t l,
                          std::size_t trial);

struct TimingRow {
    std::size_t n_points = 0;
    std::size_t n_objectives = 0;
    std::size_t n_levels = 0;
    std::size_t trial = 0;
    Algo algo = Algo::Dc;
    std::uint64_t time_ns = 0;
    std::uint64_t checksum = 0;
};

struct GridConfig {
    std::vector<std::size_t> n_values;
    std::vector<std::size_t> m_values;
    std::vector<std::size_t> l_values;
    std::size_t trials = 10;
    std::vector<Algo> algos;
    SwitchPolicy policy;
    std::uint64_t base_seed = 0x6e647365656400ULL;
    std::string dataset_dir;  ///< when non-empty, every dataset is persisted here
};

/// Runs the benchmark grid: per (N, M, L, trial) one freshly generated
/// dataset, one warm-up run per algorithm per cell, then strictly sequential
/// timed runs on a monotonic clock. Rank checksums must agree across
/// algorithms within a trial; a mismatch aborts with the offending spec in
/// the message and no timing rows are emitted for that cell.
std::vector<TimingRow> run_grid(const GridConfig& config, std::ostream* progress = nullptr);

void write_timing_csv(std::ostream& out, std::span<const TimingRow> rows);
std::vector<TimingRow> read_timing_csv(std::istream& in);

struct RatioRow {
    std::size_t n_points = 0;
    std::size_t n_objectives = 0;
    std::size_t n_levels = 0;
    Algo algo = Algo::Dc;
    double avg = 0.0;
    double min = 0.0;
    double max = 0.0;
};

/// Per (N, M, L) cell and per algorithm: avg/min/max of time divided by the
/// cell's average divide-and-conquer time. Throws when a cell has no
/// divide-and-conquer rows to normalize by.
std::vector<RatioRow> summarize_ratios(std::span<const TimingRow> rows);

void write_ratio_csv(std::ostream& out, std::span<const RatioRow> rows);

// --- subproblem recording --------------------------------------------------

enum class SubproblemKind { A, B };

/// One captured recursion subproblem, replayable in isolation: the point
/// indices (rows of the recorded run's sorted matrix), the A/B role, the
/// active objective count and the incoming rank lower bounds.
struct SubproblemRecord {
    SubproblemKind kind = SubproblemKind::A;
    std::size_t m = 0;
    std::vector<std::int32_t> set_a;     ///< S for kind A, L for kind B
    std::vector<std::int32_t> set_b;     ///< H for kind B, empty for kind A
    std::vector<std::int32_t> bounds_a;  ///< incoming ranks of set_a
    std::vector<std::int32_t> bounds_b;  ///< incoming ranks of set_b
};

/// A dataset's lexicographically sorted point matrix plus every subproblem
/// the divide-and-conquer run created on it (sweep-level calls excluded).
struct RecordedRun {
    std::vector<double> sorted_values;  // row-major n x m
    std::size_t n_points = 0;
    std::size_t n_objectives = 0;
    std::vector<SubproblemRecord> records;

    PointsView view() const { return {sorted_values.data(), n_points, n_objectives}; }
};

RecordedRun record_subproblems(const PointSet& points);

enum class SubproblemSolver { Dc, Bos };

struct SubproblemTiming {
    std::uint64_t time_ns = 0;              ///< median over the timing trials
    std::vector<std::int32_t> final_ranks;  ///< ranks of the record's target points
};

/// Replays one record through the chosen solver with fresh copies of the
/// incoming bounds per trial.
SubproblemTiming time_subproblem(const RecordedRun& run, const SubproblemRecord& record,
                                 SubproblemSolver solver, std::size_t timing_trials = 5);

struct SubproblemComparison {
    std::size_t n = 0;
    std::size_t m = 0;
    SubproblemKind kind = SubproblemKind::A;
    std::uint64_t t_dc_ns = 0;
    std::uint64_t t_bos_ns = 0;
    double rel_gap = 0.0;  ///< (t_bos - t_dc) / max(t_dc, t_bos); negative = BOS faster
};

/// Times every record with both solvers. Throws if the solvers ever
/// disagree on the resulting ranks.
std::vector<SubproblemComparison> compare_subproblems(const RecordedRun& run,
                                                      std::size_t timing_trials = 5,
                                                      std::ostream* progress = nullptr);

void write_subproblem_csv(std::ostream& out, std::span<const SubproblemComparison> rows);

}  // namespace ndsort::bench
