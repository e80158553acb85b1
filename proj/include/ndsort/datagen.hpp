#pragma once

#include "ndsort/core.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ndsort {

/// Recipe for one benchmark dataset. n_levels = 0 asks for an unconstrained
/// uniform cloud in [0,1]^M; n_levels >= 1 asks for exactly that many
/// non-domination levels.
///
/// Generation is fully determined by the seed: the stream is mt19937_64 and
/// doubles are built from the top 53 bits of each output, so identical specs
/// produce bitwise-identical datasets on every platform.
struct DatasetSpec {
    std::size_t n_points = 0;
    std::size_t n_objectives = 2;
    std::size_t n_levels = 0;
    std::uint64_t seed = 0;
};

/// n_points i.i.d. uniform on [0,1)^M. Requires n_levels = 0.
PointSet generate_uniform(const DatasetSpec& spec);

/// Points uniform on the simplex surface sum(x) = 1, x >= 0 (normalized
/// exponential sampling); all points are mutually non-dominated, so the
/// dataset has exactly one level. Requires n_levels = 1.
PointSet generate_hyperplane(const DatasetSpec& spec);

/// Exactly n_levels non-domination levels: level k lives on the sheet
/// sum(x) = 1 + k*delta and every level-k point is a level-(k-1) point plus
/// a strictly positive vector, so its rank is forced to k from both sides.
/// Throws std::invalid_argument when n_points < n_levels.
PointSet generate_leveled(const DatasetSpec& spec);

/// Dispatch on spec.n_levels.
PointSet generate(const DatasetSpec& spec);

/// Text dataset format. Line 1: "N M L seed"; then one point per line, M
/// values with 17 significant digits (round-trip exact).
void write_dataset(std::ostream& out, const DatasetSpec& spec, const PointSet& points);
void write_dataset_file(const std::string& path, const DatasetSpec& spec, const PointSet& points);

struct LoadedDataset {
    DatasetSpec spec;
    PointSet points;
};

LoadedDataset read_dataset(std::istream& in);
LoadedDataset read_dataset_file(const std::string& path);

}  // namespace ndsort
