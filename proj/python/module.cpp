#include "ndsort/bench.hpp"
#include "ndsort/best_order_sort.hpp"
#include "ndsort/datagen.hpp"
#include "ndsort/divide_conquer.hpp"
#include "ndsort/hybrid.hpp"
#include "ndsort/oracle.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

namespace py = pybind11;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

ndsort::PointSet point_set_from_array(const DoubleArray& points) {
    const auto buf = points.request();
    if (buf.ndim != 2) throw std::invalid_argument("points must be a 2-D array of shape (N, M)");
    const auto n = static_cast<std::size_t>(buf.shape[0]);
    const auto m = static_cast<std::size_t>(buf.shape[1]);
    const double* data = static_cast<const double*>(buf.ptr);
    std::vector<ndsort::ObjectiveVector> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i].assign(data + i * m, data + (i + 1) * m);
    return ndsort::build_point_set(rows);
}

py::array_t<std::int32_t> ranks_to_array(const ndsort::RankAssignment& ranks) {
    py::array_t<std::int32_t> out(static_cast<py::ssize_t>(ranks.ranks.size()));
    std::copy(ranks.ranks.begin(), ranks.ranks.end(), out.mutable_data());
    return out;
}

py::array_t<double> point_set_to_array(const ndsort::PointSet& points) {
    const auto n = points.original_count();
    const auto m = points.objective_count();
    py::array_t<double> out({static_cast<py::ssize_t>(n), static_cast<py::ssize_t>(m)});
    double* data = out.mutable_data();
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = points.unique_point(static_cast<std::size_t>(points.group_of()[i]));
        std::copy(row.begin(), row.end(), data + i * m);
    }
    return out;
}

py::array_t<std::int32_t> sort_array(const DoubleArray& points, const std::string& algo,
                                     const ndsort::SwitchPolicy& policy) {
    const auto set = point_set_from_array(points);
    if (algo == "naive") return ranks_to_array(ndsort::sort_naive(set));
    if (algo == "bos") return ranks_to_array(ndsort::sort_bos(set));
    if (algo == "dc") return ranks_to_array(ndsort::sort_dc(set));
    if (algo == "hybrid") return ranks_to_array(ndsort::sort_hybrid(set, policy));
    throw std::invalid_argument("algo must be one of: naive, bos, dc, hybrid");
}

}  // namespace

PYBIND11_MODULE(_ndsort, m) {
    m.doc() = "Non-dominated sorting: naive, Best Order Sort, divide-and-conquer, and a hybrid "
              "with a size-based switch rule, plus benchmark dataset generators.";
    m.attr("__version__") = "0.1.0";

    py::class_<ndsort::SwitchPolicy> policy(m, "SwitchPolicy");
    py::enum_<ndsort::SwitchPolicy::DMode>(policy, "DMode")
        .value("SUBPROBLEM_OBJECTIVES", ndsort::SwitchPolicy::DMode::SubproblemObjectives)
        .value("ORIGINAL_OBJECTIVES", ndsort::SwitchPolicy::DMode::OriginalObjectives);
    policy.def(py::init<>())
        .def_readwrite("c_left", &ndsort::SwitchPolicy::c_left)
        .def_readwrite("c_right", &ndsort::SwitchPolicy::c_right)
        .def_readwrite("exponent", &ndsort::SwitchPolicy::exponent)
        .def_readwrite("offset", &ndsort::SwitchPolicy::offset)
        .def_readwrite("d_mode", &ndsort::SwitchPolicy::d_mode)
        .def_readwrite("enabled", &ndsort::SwitchPolicy::enabled);

    m.def("sort", &sort_array, py::arg("points"), py::arg("algo") = "hybrid",
          py::arg("policy") = ndsort::SwitchPolicy{},
          "Non-dominated sorting of an (N, M) array; returns one rank per row.");
    m.def(
        "sort_naive",
        [](const DoubleArray& pts) { return ranks_to_array(ndsort::sort_naive(point_set_from_array(pts))); },
        py::arg("points"));
    m.def(
        "sort_bos",
        [](const DoubleArray& pts) { return ranks_to_array(ndsort::sort_bos(point_set_from_array(pts))); },
        py::arg("points"));
    m.def(
        "sort_dc",
        [](const DoubleArray& pts) { return ranks_to_array(ndsort::sort_dc(point_set_from_array(pts))); },
        py::arg("points"));
    m.def(
        "sort_hybrid",
        [](const DoubleArray& pts, const ndsort::SwitchPolicy& policy) {
            return ranks_to_array(ndsort::sort_hybrid(point_set_from_array(pts), policy));
        },
        py::arg("points"), py::arg("policy") = ndsort::SwitchPolicy{});

    m.def(
        "count_levels",
        [](const std::vector<std::int32_t>& ranks) {
            return ndsort::count_levels(ndsort::RankAssignment{ranks});
        },
        py::arg("ranks"), "Number of non-domination levels: 1 + max rank.");

    m.def(
        "switch_interval",
        [](std::size_t m_active, const ndsort::SwitchPolicy& policy, std::size_t m_original) {
            return ndsort::switch_interval(m_active, policy, m_original);
        },
        py::arg("m"), py::arg("policy") = ndsort::SwitchPolicy{}, py::arg("m_original") = 0,
        "(n_min, n_max) of the subproblem sizes routed to Best Order Sort.");
    m.def(
        "should_switch",
        [](std::size_t n, std::size_t m_active, const ndsort::SwitchPolicy& policy,
           std::size_t m_original) { return ndsort::should_switch(n, m_active, policy, m_original); },
        py::arg("n"), py::arg("m"), py::arg("policy") = ndsort::SwitchPolicy{},
        py::arg("m_original") = 0);

    m.def(
        "generate",
        [](std::size_t n, std::size_t m_objectives, std::size_t levels, std::uint64_t seed) {
            return point_set_to_array(
                ndsort::generate(ndsort::DatasetSpec{n, m_objectives, levels, seed}));
        },
        py::arg("n"), py::arg("m"), py::arg("levels"), py::arg("seed"),
        "Benchmark dataset as an (N, M) array: levels = 0 for a uniform cube, otherwise exactly "
        "that many non-domination levels.");

    m.def("grid_sizes", &ndsort::bench::grid_sizes, py::arg("n_lo"), py::arg("n_hi"),
          "Benchmark point counts floor(10^(n/4)) for n in [n_lo, n_hi].");
}
