// Command-line front end: dataset generation, sorting, the benchmark grid,
// and per-subproblem timing.

#include "ndsort/bench.hpp"
#include "ndsort/best_order_sort.hpp"
#include "ndsort/datagen.hpp"
#include "ndsort/divide_conquer.hpp"
#include "ndsort/hybrid.hpp"
#include "ndsort/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct PolicyFlags {
    bool switch_off = false;
    double c_right = 150.0;
    double exponent = 0.9;
    double offset = 1.5;
    std::string d_mode = "m";

    ndsort::SwitchPolicy to_policy() const {
        ndsort::SwitchPolicy policy;
        policy.enabled = !switch_off;
        policy.c_right = c_right;
        policy.exponent = exponent;
        policy.offset = offset;
        policy.d_mode = d_mode == "M" ? ndsort::SwitchPolicy::DMode::OriginalObjectives
                                      : ndsort::SwitchPolicy::DMode::SubproblemObjectives;
        return policy;
    }
};

void add_policy_flags(CLI::App* cmd, PolicyFlags& flags) {
    cmd->add_flag("--switch-off", flags.switch_off, "disable the hybrid's switch to Best Order Sort");
    cmd->add_option("--c-right", flags.c_right, "coefficient of the switch interval's upper bound");
    cmd->add_option("--exponent", flags.exponent, "exponent of the switch interval's upper bound");
    cmd->add_option("--offset", flags.offset, "subtrahend in the switch interval's upper bound");
    cmd->add_option("--d-mode", flags.d_mode, "d in the upper bound: m (subproblem) or M (original)")
        ->check(CLI::IsMember({"m", "M"}));
}

std::vector<std::size_t> parse_size_list(const std::string& csv, const char* what) {
    std::vector<std::size_t> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError(std::string(what) + ": not an integer: " + item);
        }
    }
    if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const int single = std::stoi(text);
        return {single, single};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

int run_generate(const std::string& out_path, std::size_t n, std::size_t m, std::size_t levels,
                 std::uint64_t seed) {
    ndsort::DatasetSpec spec{n, m, levels, seed};
    const ndsort::PointSet points = ndsort::generate(spec);
    ndsort::write_dataset_file(out_path, spec, points);
    std::cerr << "wrote " << points.original_count() << " points to " << out_path << "\n";
    return 0;
}

int run_sort(const std::string& in_path, const std::string& algo_name, const PolicyFlags& flags) {
    const auto algo = ndsort::bench::algo_from_name(algo_name);
    if (!algo) {
        std::cerr << "unknown algorithm: " << algo_name << "\n";
        return 1;
    }
    const auto dataset = ndsort::read_dataset_file(in_path);
    ndsort::RankAssignment ranks;
    switch (*algo) {
        case ndsort::bench::Algo::Naive: ranks = ndsort::sort_naive(dataset.points); break;
        case ndsort::bench::Algo::Bos: ranks = ndsort::sort_bos(dataset.points); break;
        case ndsort::bench::Algo::Dc: ranks = ndsort::sort_dc(dataset.points); break;
        case ndsort::bench::Algo::Hybrid:
            ranks = ndsort::sort_hybrid(dataset.points, flags.to_policy());
            break;
    }
    for (std::int32_t r : ranks.ranks) std::cout << r << '\n';
    return 0;
}

int run_grid_cmd(const std::string& n_range, const std::string& m_csv, const std::string& l_csv,
                 std::size_t trials, const std::string& algos_csv, const std::string& out_path,
                 std::uint64_t seed, const std::string& dataset_dir, const PolicyFlags& flags) {
    ndsort::bench::GridConfig config;
    const auto [n_lo, n_hi] = parse_range(n_range);
    config.n_values = ndsort::bench::grid_sizes(n_lo, n_hi);
    config.m_values = parse_size_list(m_csv, "--m");
    config.l_values = parse_size_list(l_csv, "--levels");
    config.trials = trials;
    config.policy = flags.to_policy();
    config.base_seed = seed;
    config.dataset_dir = dataset_dir;

    std::istringstream algos(algos_csv);
    std::string name;
    while (std::getline(algos, name, ',')) {
        const auto algo = ndsort::bench::algo_from_name(name);
        if (!algo) {
            std::cerr << "unknown algorithm: " << name << "\n";
            return 1;
        }
        config.algos.push_back(*algo);
    }

    const auto rows = ndsort::bench::run_grid(config, &std::cerr);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open " << out_path << " for writing\n";
        return 1;
    }
    ndsort::bench::write_timing_csv(out, rows);
    std::cerr << "wrote " << rows.size() << " timing rows to " << out_path << "\n";
    return 0;
}

int run_record(const std::string& in_path, const std::string& out_path, std::size_t trials) {
    const auto dataset = ndsort::read_dataset_file(in_path);
    const auto run = ndsort::bench::record_subproblems(dataset.points);
    std::cerr << "recorded " << run.records.size() << " subproblems\n";
    const auto rows = ndsort::bench::compare_subproblems(run, trials, &std::cerr);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open " << out_path << " for writing\n";
        return 1;
    }
    ndsort::bench::write_subproblem_csv(out, rows);
    std::cerr << "wrote " << rows.size() << " rows to " << out_path << "\n";
    return 0;
}

int run_summarize(const std::string& in_path, const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in) {
        std::cerr << "cannot open " << in_path << "\n";
        return 1;
    }
    const auto rows = ndsort::bench::read_timing_csv(in);
    const auto ratios = ndsort::bench::summarize_ratios(rows);
    if (out_path.empty()) {
        ndsort::bench::write_ratio_csv(std::cout, ratios);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return 1;
        }
        ndsort::bench::write_ratio_csv(out, ratios);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-dominated sorting toolkit: dataset generation, sorting, benchmarking"};
    app.require_subcommand(1);

    // generate
    std::size_t gen_n = 0, gen_m = 0, gen_levels = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "generate a dataset file");
    generate->add_option("--n", gen_n, "number of points")->required();
    generate->add_option("--m", gen_m, "number of objectives")->required();
    generate->add_option("--levels", gen_levels, "non-domination levels (0 = uniform cube)")->required();
    generate->add_option("--seed", gen_seed, "RNG seed")->required();
    generate->add_option("--out", gen_out, "output path")->required();

    // sort
    std::string sort_algo, sort_in;
    PolicyFlags sort_policy;
    auto* sort = app.add_subcommand("sort", "rank a dataset; prints one rank per line in input order");
    sort->add_option("--algo", sort_algo, "naive|bos|dc|hybrid")->required();
    sort->add_option("--in", sort_in, "dataset path")->required();
    add_policy_flags(sort, sort_policy);

    // grid
    std::string grid_n_range = "8:20", grid_m = "3,5,7,10,15", grid_l = "1,2,3,5,10,20";
    std::string grid_algos = "bos,dc,hybrid", grid_out, grid_dataset_dir;
    std::size_t grid_trials = 10;
    std::uint64_t grid_seed = ndsort::bench::GridConfig{}.base_seed;
    bool grid_full = false;
    PolicyFlags grid_policy;
    auto* grid = app.add_subcommand("grid", "run the benchmark grid and write a timing CSV");
    grid->add_option("--n-range", grid_n_range, "lo:hi exponents of N = floor(10^(n/4))");
    grid->add_option("--m", grid_m, "objective counts, comma separated");
    grid->add_option("--levels", grid_l, "level counts, comma separated");
    grid->add_option("--trials", grid_trials, "trials (= datasets) per cell");
    grid->add_option("--algos", grid_algos, "algorithms, comma separated");
    grid->add_option("--out", grid_out, "output CSV path")->required();
    grid->add_option("--seed", grid_seed, "base seed for dataset derivation");
    grid->add_option("--save-datasets", grid_dataset_dir, "persist every generated dataset into this directory");
    grid->add_flag("--full", grid_full, "use the full objective grid up to M = 30");
    add_policy_flags(grid, grid_policy);

    // record
    std::string record_in, record_out;
    std::size_t record_trials = 5;
    auto* record = app.add_subcommand(
        "record", "record divide-and-conquer subproblems and time both solvers on each");
    record->add_option("--in", record_in, "dataset path")->required();
    record->add_option("--out", record_out, "output CSV path")->required();
    record->add_option("--trials", record_trials, "timing trials per subproblem (median is reported)");

    // summarize
    std::string sum_in, sum_out;
    auto* summarize = app.add_subcommand("summarize", "reduce a timing CSV to per-cell ratio statistics");
    summarize->add_option("--in", sum_in, "timing CSV path")->required();
    summarize->add_option("--out", sum_out, "output CSV path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return run_generate(gen_out, gen_n, gen_m, gen_levels, gen_seed);
        if (sort->parsed()) return run_sort(sort_in, sort_algo, sort_policy);
        if (grid->parsed()) {
            if (grid_full && grid->get_option("--m")->empty()) grid_m = "3,5,7,10,15,20,25,30";
            return run_grid_cmd(grid_n_range, grid_m, grid_l, grid_trials, grid_algos, grid_out,
                                grid_seed, grid_dataset_dir, grid_policy);
        }
        if (record->parsed()) return run_record(record_in, record_out, record_trials);
        if (summarize->parsed()) return run_summarize(sum_in, sum_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
