#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moplex/driver.hpp"
#include "moplex/io.hpp"
#include "moplex/oracle.hpp"

namespace py = pybind11;
using namespace moplex;

namespace {

AlgorithmConfig config_from_kwargs(double epsilon, py::object time_limit,
                                   py::object solution_limit, std::uint64_t seed,
                                   py::object weights, py::object priorities,
                                   bool all_permutations) {
    AlgorithmConfig cfg;
    cfg.epsilon = epsilon;
    if (!time_limit.is_none()) cfg.time_limit = time_limit.cast<double>();
    if (!solution_limit.is_none()) cfg.solution_limit = solution_limit.cast<long long>();
    cfg.seed = seed;
    if (!weights.is_none()) cfg.weights = weights.cast<std::vector<double>>();
    if (!priorities.is_none()) cfg.priorities = priorities.cast<std::vector<int>>();
    cfg.all_permutations = all_permutations;
    return cfg;
}

py::dict result_to_dict(const ResultSet& r) {
    py::dict out;
    out["status"] = to_string(r.status);
    py::list points;
    for (const auto& pt : r.points) {
        py::dict d;
        d["x"] = pt.x;
        d["y"] = pt.y;
        points.append(d);
    }
    out["points"] = points;
    out["subproblem_count"] = r.stats.subproblem_count;
    out["wall_time"] = r.stats.wall_time;
    out["variable_names"] = r.variable_names;
    return out;
}

} // namespace

PYBIND11_MODULE(moplex, m) {
    m.doc() = "Multi-objective linear and integer programming meta-solver";

    py::class_<Problem>(m, "Problem")
        .def_property_readonly("num_variables", &Problem::num_variables)
        .def_property_readonly("num_objectives", &Problem::num_objectives)
        .def_property_readonly("sense", [](const Problem& p) {
            return p.sense() == ObjectiveSense::Min ? "min" : "max";
        })
        .def("__repr__", [](const Problem& p) {
            return "<moplex.Problem n=" + std::to_string(p.num_variables()) +
                   " o=" + std::to_string(p.num_objectives()) + ">";
        });

    m.def("parse_instance", &parse_instance, py::arg("text"),
          "Parse an instance JSON document into a Problem");
    m.def("serialize_instance", &serialize_instance, py::arg("problem"), py::arg("name"),
          "Serialize a Problem back to the instance JSON format");
    m.def("evaluate_objective", &evaluate_objective, py::arg("problem"), py::arg("x"));
    m.def("dominates", &dominates, py::arg("a"), py::arg("b"),
          "Componentwise-order dominance in MIN convention");
    m.def("list_algorithms", &registered_algorithms);
    m.def(
        "enumerate_frontier",
        [](const Problem& p) {
            std::vector<std::pair<std::vector<double>, std::vector<double>>> out;
            for (const auto& pt : oracle::enumerate_frontier(p).points()) {
                out.emplace_back(pt.x, pt.y);
            }
            return out;
        },
        py::arg("problem"),
        "Exact nondominated set of a bounded integer problem (MIN convention)");
    m.def(
        "enumerate_supported",
        [](const Problem& p) {
            std::vector<std::pair<std::vector<double>, std::vector<double>>> out;
            for (const auto& pt : oracle::enumerate_supported(p).points()) {
                out.emplace_back(pt.x, pt.y);
            }
            return out;
        },
        py::arg("problem"),
        "Supported extreme subset of the nondominated set (MIN convention)");
    m.def(
        "optimize",
        [](const Problem& p, const std::string& algorithm, double epsilon, py::object time_limit,
           py::object solution_limit, std::uint64_t seed, py::object weights,
           py::object priorities, bool all_permutations) {
            AlgorithmConfig cfg =
                config_from_kwargs(epsilon, time_limit, solution_limit, seed, weights,
                                   priorities, all_permutations);
            BundledSolver solver;
            return result_to_dict(optimize(p, algorithm, cfg, solver));
        },
        py::arg("problem"), py::arg("algorithm"), py::kw_only(), py::arg("epsilon") = 1.0,
        py::arg("time_limit") = py::none(), py::arg("solution_limit") = py::none(),
        py::arg("seed") = 0, py::arg("weights") = py::none(), py::arg("priorities") = py::none(),
        py::arg("all_permutations") = true,
        "Solve a multi-objective problem and return {status, points, ...}");
}
