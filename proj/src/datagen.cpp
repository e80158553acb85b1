#include "ndsort/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ndsort {
namespace {

double next_unit(std::mt19937_64& rng) {
    // top 53 bits -> [0, 1); identical on every platform, unlike
    // std::uniform_real_distribution
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double next_exponential(std::mt19937_64& rng) {
    double e = 0.0;
    while (e <= 0.0) e = -std::log1p(-next_unit(rng));
    return e;
}

// Positive vector with the given coordinate sum, direction uniform on the
// simplex interior.
ObjectiveVector simplex_point(std::mt19937_64& rng, std::size_t dim, double sum) {
    ObjectiveVector v(dim);
    double total = 0.0;
    for (auto& x : v) {
        x = next_exponential(rng);
        total += x;
    }
    for (auto& x : v) x = x / total * sum;
    return v;
}

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

class DistinctCollector {
public:
    // Regenerates on (vanishingly unlikely) exact collisions so every
    // generated dataset is duplicate-free.
    template <typename Gen>
    void add(Gen&& gen) {
        ObjectiveVector v = gen();
        while (!seen_.insert(v).second) v = gen();
        rows_.push_back(std::move(v));
    }

    const ObjectiveVector& row(std::size_t i) const { return rows_[i]; }
    std::vector<ObjectiveVector> take() { return std::move(rows_); }

private:
    std::set<ObjectiveVector> seen_;
    std::vector<ObjectiveVector> rows_;
};

}  // namespace

PointSet generate_uniform(const DatasetSpec& spec) {
    require(spec.n_levels == 0, "generate_uniform requires n_levels = 0");
    require(spec.n_objectives >= 2, "need at least 2 objectives");
    std::mt19937_64 rng(spec.seed);
    DistinctCollector out;
    for (std::size_t i = 0; i < spec.n_points; ++i) {
        out.add([&] {
            ObjectiveVector v(spec.n_objectives);
            for (auto& x : v) x = next_unit(rng);
            return v;
        });
    }
    return build_point_set(out.take());
}

PointSet generate_hyperplane(const DatasetSpec& spec) {
    require(spec.n_levels == 1, "generate_hyperplane requires n_levels = 1");
    require(spec.n_objectives >= 2, "need at least 2 objectives");
    std::mt19937_64 rng(spec.seed);
    DistinctCollector out;
    for (std::size_t i = 0; i < spec.n_points; ++i) {
        out.add([&] { return simplex_point(rng, spec.n_objectives, 1.0); });
    }
    return build_point_set(out.take());
}

PointSet generate_leveled(const DatasetSpec& spec) {
    require(spec.n_levels >= 1, "generate_leveled requires n_levels >= 1");
    if (spec.n_points < spec.n_levels) {
        throw std::invalid_argument("infeasible dataset spec: fewer points than levels");
    }
    if (spec.n_levels == 1) return generate_hyperplane(spec);
    require(spec.n_objectives >= 2, "need at least 2 objectives");

    const std::size_t levels = spec.n_levels;
    const double delta = 0.5 / static_cast<double>(levels);
    std::mt19937_64 rng(spec.seed);
    DistinctCollector out;

    std::vector<std::size_t> level_size(levels, spec.n_points / levels);
    for (std::size_t k = 0; k < spec.n_points % levels; ++k) ++level_size[k];

    // Level 0 sits on sum(x) = 1; each later point is a previous-level point
    // plus a strictly positive offset of coordinate sum delta. Ancestors
    // force rank >= k; a dominator always has a strictly smaller coordinate
    // sum, so only lower sheets dominate and the rank is capped at k too.
    std::size_t level_begin = 0;
    std::size_t prev_begin = 0;
    for (std::size_t k = 0; k < levels; ++k) {
        for (std::size_t i = 0; i < level_size[k]; ++i) {
            if (k == 0) {
                out.add([&] { return simplex_point(rng, spec.n_objectives, 1.0); });
            } else {
                const auto& parent = out.row(prev_begin + i % level_size[k - 1]);
                out.add([&] {
                    ObjectiveVector v = simplex_point(rng, spec.n_objectives, delta);
                    for (std::size_t j = 0; j < v.size(); ++j) v[j] += parent[j];
                    return v;
                });
            }
        }
        prev_begin = level_begin;
        level_begin += level_size[k];
    }
    return build_point_set(out.take());
}

PointSet generate(const DatasetSpec& spec) {
    if (spec.n_levels == 0) return generate_uniform(spec);
    return generate_leveled(spec);
}

void write_dataset(std::ostream& out, const DatasetSpec& spec, const PointSet& points) {
    out << points.original_count() << ' ' << points.objective_count() << ' ' << spec.n_levels << ' '
        << spec.seed << '\n';
    char buf[32];
    for (std::size_t i = 0; i < points.original_count(); ++i) {
        const auto row = points.unique_point(static_cast<std::size_t>(points.group_of()[i]));
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", row[j]);
            if (j > 0) out << ' ';
            out << buf;
        }
        out << '\n';
    }
}

void write_dataset_file(const std::string& path, const DatasetSpec& spec, const PointSet& points) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_dataset(out, spec, points);
}

LoadedDataset read_dataset(std::istream& in) {
    LoadedDataset result;
    std::size_t n = 0, m = 0;
    if (!(in >> n >> m >> result.spec.n_levels >> result.spec.seed)) {
        throw std::runtime_error("malformed dataset header (want: N M L seed)");
    }
    result.spec.n_points = n;
    result.spec.n_objectives = m;
    std::vector<ObjectiveVector> rows(n, ObjectiveVector(m));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!(in >> rows[i][j])) throw std::runtime_error("truncated dataset body");
        }
    }
    result.points = build_point_set(rows);
    return result;
}

LoadedDataset read_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset: " + path);
    return read_dataset(in);
}

}  // namespace ndsort
