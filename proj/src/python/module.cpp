// Python bindings for the core operations: matrix construction and
// generators, the estimate sequence, spline extrapolation, the exact oracle
// and Matrix Market I/O.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "logdet/estimator.hpp"
#include "logdet/generators.hpp"
#include "logdet/matrix_market.hpp"
#include "logdet/oracle.hpp"
#include "logdet/spline.hpp"

namespace py = pybind11;
using namespace logdet;

namespace {

SparseSpdMatrix matrix_from_triplets(Index n,
                                     const std::vector<std::tuple<Index, Index, double>>& items) {
    std::vector<Triplet> triplets;
    triplets.reserve(items.size());
    for (const auto& [i, j, v] : items) {
        triplets.push_back({i, j, v});
    }
    return SparseSpdMatrix::from_triplets(n, std::move(triplets));
}

}  // namespace

PYBIND11_MODULE(_logdet, m) {
    m.doc() = "Log-determinant estimation for sparse SPD matrices";

    py::register_exception<Error>(m, "LogdetError");

    py::class_<SparseSpdMatrix>(m, "SparseSpdMatrix")
        .def_static("from_triplets", &matrix_from_triplets, py::arg("n"), py::arg("triplets"))
        .def_property_readonly("order", &SparseSpdMatrix::order)
        .def_property_readonly("nnz", &SparseSpdMatrix::nnz)
        .def_property_readonly("storage_density", &SparseSpdMatrix::storage_density)
        .def("entry", &SparseSpdMatrix::entry, py::arg("i"), py::arg("j"))
        .def("__eq__",
             [](const SparseSpdMatrix& a, const SparseSpdMatrix& b) { return a == b; })
        .def("__repr__", [](const SparseSpdMatrix& a) {
            return "SparseSpdMatrix(order=" + std::to_string(a.order()) +
                   ", nnz=" + std::to_string(a.nnz()) + ")";
        });

    py::class_<EstimateSeries>(m, "EstimateSeries")
        .def_readonly("estimates", &EstimateSeries::estimates)
        .def_readonly("entry_counts", &EstimateSeries::entry_counts)
        .def_readonly("densities", &EstimateSeries::densities)
        .def("__len__", &EstimateSeries::size);

    m.def("grid_laplacian",
          [](Index side, Index dim) { return grid_laplacian({side, dim}); }, py::arg("side"),
          py::arg("dim"));
    m.def("random_dd_spd", &random_dd_spd, py::arg("n"), py::arg("extra_offdiag_per_row"),
          py::arg("seed"));

    m.def("estimate_series", &estimate_series, py::arg("matrix"), py::arg("max_power"),
          py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());
    m.def(
        "row_contributions",
        [](const SparseSpdMatrix& a, Index i, std::size_t max_power) {
            std::vector<std::pair<double, Index>> out;
            for (const auto& c : row_contributions(a, i, max_power)) {
                out.emplace_back(c.log_pivot, c.pattern_size);
            }
            return out;
        },
        py::arg("matrix"), py::arg("row"), py::arg("max_power"));

    m.def(
        "extrapolation_point",
        [](const std::vector<double>& x) { return extrapolation_point(x); }, py::arg("x"));
    m.def(
        "extrapolate",
        [](const std::vector<double>& known, const std::vector<double>& x,
           const std::string& variant) {
            return extrapolate(known, x, weight_rule_from_string(variant));
        },
        py::arg("known"), py::arg("x"), py::arg("variant") = "inverse-symmetric");
    m.def(
        "spline_series",
        [](const std::vector<double>& known, const std::vector<double>& x,
           const std::string& variant) {
            return spline_series(known, x, weight_rule_from_string(variant)).values;
        },
        py::arg("known"), py::arg("x"), py::arg("variant") = "inverse-symmetric");

    m.def("exact_logdet", &exact_logdet, py::arg("matrix"),
          py::arg("dense_limit") = kDefaultDenseLimit,
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "principal_minor_logdet",
        [](const SparseSpdMatrix& a, const std::vector<Index>& s) {
            return principal_minor_logdet(a, s);
        },
        py::arg("matrix"), py::arg("index_set"));
    m.def(
        "hadamard_fischer_check",
        [](const SparseSpdMatrix& a, const std::vector<Index>& alpha,
           const std::vector<Index>& beta, double tolerance) {
            return hadamard_fischer_check(a, alpha, beta, tolerance);
        },
        py::arg("matrix"), py::arg("alpha"), py::arg("beta"), py::arg("tolerance") = 1e-9);

    m.def("pattern_density", &pattern_density, py::arg("total_entries"), py::arg("n"));

    m.def("read_matrix_market", &read_matrix_market_file, py::arg("path"));
    m.def("write_matrix_market", &write_matrix_market_file, py::arg("matrix"), py::arg("path"));
}
