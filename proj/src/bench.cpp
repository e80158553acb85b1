#include "ndsort/bench.hpp"

#include "ndsort/best_order_sort.hpp"
#include "ndsort/divide_conquer.hpp"
#include "ndsort/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ndsort::bench {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

RankAssignment run_algo(Algo algo, const PointSet& points, const SwitchPolicy& policy) {
    switch (algo) {
        case Algo::Naive: return sort_naive(points);
        case Algo::Bos: return sort_bos(points);
        case Algo::Dc: return sort_dc(points);
        case Algo::Hybrid: return sort_hybrid(points, policy);
    }
    throw std::logic_error("unknown algorithm");
}

std::uint64_t median_ns(std::vector<std::uint64_t> samples) {
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

}  // namespace

std::vector<std::size_t> grid_sizes(int n_lo, int n_hi) {
    if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("grid_sizes: need 1 <= n_lo <= n_hi");
    std::vector<std::size_t> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (n % 4 == 0) {
            std::size_t v = 1;
            for (int k = 0; k < n / 4; ++k) v *= 10;
            out.push_back(v);
        } else {
            out.push_back(static_cast<std::size_t>(
                std::floor(std::pow(10.0L, static_cast<long double>(n) / 4.0L))));
        }
    }
    return out;
}

std::string_view algo_name(Algo algo) {
    switch (algo) {
        case Algo::Naive: return "naive";
        case Algo::Bos: return "bos";
        case Algo::Dc: return "dc";
        case Algo::Hybrid: return "hybrid";
    }
    return "?";
}

std::optional<Algo> algo_from_name(std::string_view name) {
    if (name == "naive") return Algo::Naive;
    if (name == "bos") return Algo::Bos;
    if (name == "dc") return Algo::Dc;
    if (name == "hybrid") return Algo::Hybrid;
    return std::nullopt;
}

std::uint64_t rank_checksum(const RankAssignment& ranks) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::int32_t r : ranks.ranks) {
        for (int byte = 0; byte < 4; ++byte) {
            h ^= static_cast<std::uint64_t>((static_cast<std::uint32_t>(r) >> (8 * byte)) & 0xff);
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t base, std::size_t n, std::size_t m, std::size_t l,
                          std::size_t trial) {
    std::uint64_t x = base;
    (void)splitmix64(x);
    x ^= splitmix64(x) + n;
    x ^= splitmix64(x) + m;
    x ^= splitmix64(x) + l;
    x ^= splitmix64(x) + trial;
    return splitmix64(x);
}

std::vector<TimingRow> run_grid(const GridConfig& config, std::ostream* progress) {
    if (config.algos.empty()) throw std::invalid_argument("run_grid: no algorithms selected");
    std::vector<TimingRow> rows;

    for (std::size_t n : config.n_values) {
        for (std::size_t m : config.m_values) {
            for (std::size_t l : config.l_values) {
                if (progress) {
                    *progress << "cell N=" << n << " M=" << m << " L=" << l << std::endl;
                }
                std::vector<TimingRow> cell_rows;
                for (std::size_t trial = 0; trial < config.trials; ++trial) {
                    DatasetSpec spec{n, m, l, derive_seed(config.base_seed, n, m, l, trial)};
                    const PointSet points = generate(spec);
                    if (!config.dataset_dir.empty()) {
                        std::ostringstream name;
                        name << config.dataset_dir << "/n" << n << "_m" << m << "_l" << l << "_t"
                             << trial << ".txt";
                        write_dataset_file(name.str(), spec, points);
                    }
                    if (trial == 0) {
                        for (Algo algo : config.algos) (void)run_algo(algo, points, config.policy);
                    }
                    std::optional<std::uint64_t> expected;
                    for (Algo algo : config.algos) {
                        const std::uint64_t t0 = now_ns();
                        const RankAssignment ranks = run_algo(algo, points, config.policy);
                        const std::uint64_t elapsed = now_ns() - t0;
                        const std::uint64_t checksum = rank_checksum(ranks);
                        if (expected && *expected != checksum) {
                            std::ostringstream msg;
                            msg << "rank mismatch: algo " << algo_name(algo)
                                << " disagrees on dataset N=" << n << " M=" << m << " L=" << l
                                << " seed=" << spec.seed;
                            throw std::runtime_error(msg.str());
                        }
                        expected = expected ? expected : std::optional<std::uint64_t>(checksum);
                        cell_rows.push_back({n, m, l, trial, algo, elapsed, checksum});
                    }
                }
                rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
            }
        }
    }
    return rows;
}

void write_timing_csv(std::ostream& out, std::span<const TimingRow> rows) {
    out << "N,M,L,trial,algo,time_ns,checksum\n";
    for (const auto& row : rows) {
        out << row.n_points << ',' << row.n_objectives << ',' << row.n_levels << ',' << row.trial
            << ',' << algo_name(row.algo) << ',' << row.time_ns << ',' << row.checksum << '\n';
    }
}

std::vector<TimingRow> read_timing_csv(std::istream& in) {
    std::vector<TimingRow> rows;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty timing CSV");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        TimingRow row;
        std::string algo;
        if (!(fields >> row.n_points >> row.n_objectives >> row.n_levels >> row.trial >> algo >>
              row.time_ns >> row.checksum)) {
            throw std::runtime_error("malformed timing CSV line: " + line);
        }
        const auto parsed = algo_from_name(algo);
        if (!parsed) throw std::runtime_error("unknown algorithm in CSV: " + algo);
        row.algo = *parsed;
        rows.push_back(row);
    }
    return rows;
}

std::vector<RatioRow> summarize_ratios(std::span<const TimingRow> rows) {
    using CellKey = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::map<CellKey, std::map<Algo, std::vector<double>>> cells;
    std::vector<CellKey> order;
    for (const auto& row : rows) {
        CellKey key{row.n_points, row.n_objectives, row.n_levels};
        if (!cells.contains(key)) order.push_back(key);
        cells[key][row.algo].push_back(static_cast<double>(row.time_ns));
    }
    std::sort(order.begin(), order.end());

    std::vector<RatioRow> out;
    for (const auto& key : order) {
        const auto& by_algo = cells[key];
        const auto dc_it = by_algo.find(Algo::Dc);
        if (dc_it == by_algo.end()) {
            std::ostringstream msg;
            msg << "cell N=" << std::get<0>(key) << " M=" << std::get<1>(key)
                << " L=" << std::get<2>(key) << " has no divide-and-conquer rows to normalize by";
            throw std::runtime_error(msg.str());
        }
        double dc_avg = 0.0;
        for (double t : dc_it->second) dc_avg += t;
        dc_avg /= static_cast<double>(dc_it->second.size());

        for (const auto& [algo, times] : by_algo) {
            RatioRow row;
            row.n_points = std::get<0>(key);
            row.n_objectives = std::get<1>(key);
            row.n_levels = std::get<2>(key);
            row.algo = algo;
            double sum = 0.0;
            double lo = times.front(), hi = times.front();
            for (double t : times) {
                sum += t;
                lo = std::min(lo, t);
                hi = std::max(hi, t);
            }
            row.avg = sum / static_cast<double>(times.size()) / dc_avg;
            row.min = lo / dc_avg;
            row.max = hi / dc_avg;
            out.push_back(row);
        }
    }
    return out;
}

void write_ratio_csv(std::ostream& out, std::span<const RatioRow> rows) {
    out << "N,M,L,algo,ratio_avg,ratio_min,ratio_max\n";
    char buf[96];
    for (const auto& row : rows) {
        out << row.n_points << ',' << row.n_objectives << ',' << row.n_levels << ','
            << algo_name(row.algo);
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g", row.avg, row.min, row.max);
        out << buf << '\n';
    }
}

// --- subproblem recording ----------------------------------------------------

namespace {

// Captures every invocation that would actually recurse: sweep-level calls
// (m = 2) and the tiny direct-comparison base cases are not subproblems
// worth replaying.
class RecorderDelegate final : public dc::RecursionDelegate {
public:
    explicit RecorderDelegate(std::vector<SubproblemRecord>& out) : out_(out) {}

    bool on_helper_a(std::span<const std::int32_t> s, std::size_t m, dc::WorkingState& state) override {
        if (m >= 3 && s.size() >= 3) {
            SubproblemRecord rec;
            rec.kind = SubproblemKind::A;
            rec.m = m;
            rec.set_a.assign(s.begin(), s.end());
            for (std::int32_t i : s) rec.bounds_a.push_back(state.rank(i));
            out_.push_back(std::move(rec));
        }
        return false;
    }

    bool on_helper_b(std::span<const std::int32_t> l, std::span<const std::int32_t> h, std::size_t m,
                     dc::WorkingState& state) override {
        if (m >= 3 && l.size() >= 2 && h.size() >= 2) {
            SubproblemRecord rec;
            rec.kind = SubproblemKind::B;
            rec.m = m;
            rec.set_a.assign(l.begin(), l.end());
            rec.set_b.assign(h.begin(), h.end());
            for (std::int32_t i : l) rec.bounds_a.push_back(state.rank(i));
            for (std::int32_t i : h) rec.bounds_b.push_back(state.rank(i));
            out_.push_back(std::move(rec));
        }
        return false;
    }

private:
    std::vector<SubproblemRecord>& out_;
};

}  // namespace

RecordedRun record_subproblems(const PointSet& points) {
    RecordedRun run;
    run.n_points = points.unique_count();
    run.n_objectives = points.objective_count();
    const auto order = lex_sorted_order(points);
    run.sorted_values.resize(run.n_points * run.n_objectives);
    for (std::size_t i = 0; i < run.n_points; ++i) {
        const auto row = points.unique_point(static_cast<std::size_t>(order[i]));
        std::copy(row.begin(), row.end(),
                  run.sorted_values.begin() + static_cast<std::ptrdiff_t>(i * run.n_objectives));
    }
    RecorderDelegate recorder(run.records);
    (void)dc::sort_with_delegate(points, &recorder);
    return run;
}

SubproblemTiming time_subproblem(const RecordedRun& run, const SubproblemRecord& record,
                                 SubproblemSolver solver, std::size_t timing_trials) {
    if (timing_trials == 0) timing_trials = 1;
    std::vector<std::int32_t> ranks(run.n_points, 0);
    std::vector<std::uint64_t> samples;
    samples.reserve(timing_trials);
    SubproblemTiming result;

    for (std::size_t trial = 0; trial < timing_trials; ++trial) {
        for (std::size_t i = 0; i < record.set_a.size(); ++i) {
            ranks[static_cast<std::size_t>(record.set_a[i])] = record.bounds_a[i];
        }
        for (std::size_t i = 0; i < record.set_b.size(); ++i) {
            ranks[static_cast<std::size_t>(record.set_b[i])] = record.bounds_b[i];
        }
        const std::uint64_t t0 = now_ns();
        if (solver == SubproblemSolver::Dc) {
            dc::WorkingState state(run.view(), ranks, nullptr);
            if (record.kind == SubproblemKind::A) {
                dc::helper_a(record.set_a, record.m, state);
            } else {
                dc::helper_b(record.set_a, record.set_b, record.m, state);
            }
        } else {
            if (record.kind == SubproblemKind::A) {
                bos::helper_a(run.view(), record.set_a, record.m, ranks);
            } else {
                bos::helper_b(run.view(), record.set_a, record.set_b, record.m, ranks);
            }
        }
        samples.push_back(now_ns() - t0);
        if (trial == 0) {
            const auto& targets = record.kind == SubproblemKind::A ? record.set_a : record.set_b;
            for (std::int32_t i : targets) result.final_ranks.push_back(ranks[static_cast<std::size_t>(i)]);
        }
    }
    result.time_ns = median_ns(std::move(samples));
    return result;
}

std::vector<SubproblemComparison> compare_subproblems(const RecordedRun& run,
                                                      std::size_t timing_trials,
                                                      std::ostream* progress) {
    std::vector<SubproblemComparison> out;
    out.reserve(run.records.size());
    std::size_t index = 0;
    for (const auto& record : run.records) {
        const auto dc_result = time_subproblem(run, record, SubproblemSolver::Dc, timing_trials);
        const auto bos_result = time_subproblem(run, record, SubproblemSolver::Bos, timing_trials);
        if (dc_result.final_ranks != bos_result.final_ranks) {
            std::ostringstream msg;
            msg << "subproblem solvers disagree on record " << index << " (kind "
                << (record.kind == SubproblemKind::A ? 'A' : 'B') << ", n "
                << record.set_a.size() + record.set_b.size() << ", m " << record.m << ")";
            throw std::runtime_error(msg.str());
        }
        SubproblemComparison cmp;
        cmp.n = record.set_a.size() + record.set_b.size();
        cmp.m = record.m;
        cmp.kind = record.kind;
        cmp.t_dc_ns = dc_result.time_ns;
        cmp.t_bos_ns = bos_result.time_ns;
        const double hi = static_cast<double>(std::max(cmp.t_dc_ns, cmp.t_bos_ns));
        cmp.rel_gap = hi == 0.0 ? 0.0
                                : (static_cast<double>(cmp.t_bos_ns) - static_cast<double>(cmp.t_dc_ns)) / hi;
        out.push_back(cmp);
        ++index;
        if (progress && index % 1000 == 0) {
            *progress << "  timed " << index << "/" << run.records.size() << " subproblems"
                      << std::endl;
        }
    }
    return out;
}

void write_subproblem_csv(std::ostream& out, std::span<const SubproblemComparison> rows) {
    out << "n,m,kind,t_dc_ns,t_bos_ns,rel_gap\n";
    char buf[32];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%.17g", row.rel_gap);
        out << row.n << ',' << row.m << ',' << (row.kind == SubproblemKind::A ? 'A' : 'B') << ','
            << row.t_dc_ns << ',' << row.t_bos_ns << ',' << buf << '\n';
    }
}

}  // namespace ndsort::bench
