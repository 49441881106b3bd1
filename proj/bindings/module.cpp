#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wmlq/generators.hpp"
#include "wmlq/io.hpp"
#include "wmlq/special.hpp"

namespace py = pybind11;

namespace {

wmlq::Algorithm algorithm_from_name(const std::string& name) {
  for (wmlq::Algorithm a :
       {wmlq::Algorithm::kAuto, wmlq::Algorithm::kGreedy,
        wmlq::Algorithm::kTreeDp, wmlq::Algorithm::kDegree2,
        wmlq::Algorithm::kU2, wmlq::Algorithm::kAllOpen,
        wmlq::Algorithm::kOracle})
    if (name == wmlq::algorithm_name(a)) return a;
  throw std::invalid_argument("unknown algorithm: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "maximum-weight many-to-one matching with lower and upper quotas";

  py::class_<wmlq::Edge>(m, "Edge")
      .def(py::init([](int applicant, int post, long long weight) {
             return wmlq::Edge{applicant, post, weight};
           }),
           py::arg("applicant"), py::arg("post"), py::arg("weight") = 1)
      .def_readwrite("applicant", &wmlq::Edge::applicant)
      .def_readwrite("post", &wmlq::Edge::post)
      .def_readwrite("weight", &wmlq::Edge::weight)
      .def("__repr__", [](const wmlq::Edge& e) {
        return "Edge(" + std::to_string(e.applicant) + ", " +
               std::to_string(e.post) + ", " + std::to_string(e.weight) + ")";
      });

  py::class_<wmlq::Instance>(m, "Instance")
      .def(py::init<>())
      .def_readwrite("num_applicants", &wmlq::Instance::num_applicants)
      .def_readwrite("num_posts", &wmlq::Instance::num_posts)
      .def_readwrite("edges", &wmlq::Instance::edges)
      .def_readwrite("lower", &wmlq::Instance::lower)
      .def_readwrite("upper", &wmlq::Instance::upper)
      .def("__eq__", [](const wmlq::Instance& a,
                        const wmlq::Instance& b) { return a == b; });

  py::class_<wmlq::SolveResult>(m, "SolveResult")
      .def_readonly("assignment", &wmlq::SolveResult::assignment)
      .def_readonly("objective", &wmlq::SolveResult::objective)
      .def_readonly("algorithm", &wmlq::SolveResult::algorithm)
      .def_readonly("exact", &wmlq::SolveResult::exact)
      .def_readonly("guarantee_factor", &wmlq::SolveResult::guarantee_factor)
      .def_readonly("dp_cells", &wmlq::SolveResult::dp_cells)
      .def_readonly("elapsed_ms", &wmlq::SolveResult::elapsed_ms);

  py::class_<wmlq::EvaluateResult>(m, "EvaluateResult")
      .def_readonly("feasible", &wmlq::EvaluateResult::feasible)
      .def_readonly("weight", &wmlq::EvaluateResult::weight)
      .def_readonly("violation", &wmlq::EvaluateResult::violation);

  m.def("parse_instance", &wmlq::parse_instance, py::arg("text"));
  m.def("render_instance", &wmlq::render_instance, py::arg("instance"));
  m.def("validate", py::overload_cast<const wmlq::Instance&>(&wmlq::validate),
        py::arg("instance"));
  m.def("simplify", &wmlq::simplify, py::arg("instance"));
  m.def("evaluate", &wmlq::evaluate, py::arg("instance"), py::arg("pairs"));

  m.def(
      "solve",
      [](const wmlq::Instance& inst, const std::string& algorithm,
         unsigned long long budget) -> std::optional<wmlq::SolveResult> {
        wmlq::SolveOptions options;
        options.algorithm = algorithm_from_name(algorithm);
        options.cell_budget = budget;
        return wmlq::solve(inst, options);
      },
      py::arg("instance"), py::arg("algorithm") = "auto",
      py::arg("budget") = wmlq::SolveOptions{}.cell_budget,
      "Solve an instance; None means infeasible (all-open mode only).");

  m.def("brute_force",
        [](const wmlq::Instance& inst) { return wmlq::brute_force(inst); },
        py::arg("instance"), "Exhaustive reference optimum, small inputs only.");

  m.def("gen_tight_a", &wmlq::gen_tight_a, py::arg("k"));
  m.def("gen_tight_b", &wmlq::gen_tight_b, py::arg("k"), py::arg("scale"));
  m.def(
      "gen_random",
      [](std::uint64_t seed, int num_applicants, int num_posts, int degree_min,
         int degree_max, long long lower_min, long long lower_max,
         long long upper_min, long long upper_max, long long weight_min,
         long long weight_max) {
        wmlq::RandomSpec spec;
        spec.seed = seed;
        spec.num_applicants = num_applicants;
        spec.num_posts = num_posts;
        spec.degree_min = degree_min;
        spec.degree_max = degree_max;
        spec.lower_min = lower_min;
        spec.lower_max = lower_max;
        spec.upper_min = upper_min;
        spec.upper_max = upper_max;
        spec.weight_min = weight_min;
        spec.weight_max = weight_max;
        return wmlq::gen_random(spec);
      },
      py::arg("seed"), py::arg("num_applicants"), py::arg("num_posts"),
      py::arg("degree_min") = 0, py::arg("degree_max") = 0,
      py::arg("lower_min") = 0, py::arg("lower_max") = 0,
      py::arg("upper_min") = 1, py::arg("upper_max") = 1,
      py::arg("weight_min") = 1, py::arg("weight_max") = 1);
}
