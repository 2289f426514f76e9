#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "phyta/errors.hpp"
#include "phyta/fixtures.hpp"
#include "phyta/frank_wolfe.hpp"
#include "phyta/fue.hpp"
#include "phyta/fuzzy.hpp"
#include "phyta/io.hpp"
#include "phyta/network.hpp"
#include "phyta/physarum_sp.hpp"

namespace py = pybind11;
using namespace phyta;

namespace {

std::string tri_repr(const TriangularFuzzy& a) {
    std::ostringstream os;
    os << "TriangularFuzzy(" << a.a1 << ", " << a.a2 << ", " << a.a3 << ")";
    return os.str();
}

Network make_network(const std::vector<int>& nodes,
                     const std::vector<std::tuple<int, int, double, double>>& links,
                     const std::vector<std::tuple<int, int, double>>& demands) {
    std::vector<Link> ls;
    ls.reserve(links.size());
    for (const auto& [i, j, c0, u] : links) {
        ls.push_back({i, j, c0, u});
    }
    std::vector<ODDemand> ds;
    ds.reserve(demands.size());
    for (const auto& [o, d, q] : demands) {
        ds.push_back({o, d, q});
    }
    return Network(nodes, ls, ds);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fuzzy user-equilibrium traffic assignment on Physarum dynamics";

    py::register_exception<Error>(m, "PhytaError", PyExc_RuntimeError);

    // --- fuzzy numbers -------------------------------------------------
    py::class_<TriangularFuzzy>(m, "TriangularFuzzy")
        .def(py::init<double, double, double>(), py::arg("a1"), py::arg("a2"), py::arg("a3"))
        .def_readonly("a1", &TriangularFuzzy::a1)
        .def_readonly("a2", &TriangularFuzzy::a2)
        .def_readonly("a3", &TriangularFuzzy::a3)
        .def_static("crisp", &TriangularFuzzy::crisp, py::arg("value"))
        .def_static("sorted", &TriangularFuzzy::sorted, py::arg("x"), py::arg("y"), py::arg("z"))
        .def("__add__", &tri_add)
        .def("__sub__", &tri_sub)
        .def("__mul__", &tri_mul)
        .def("__truediv__", &tri_div)
        .def("__eq__", [](const TriangularFuzzy& a, const TriangularFuzzy& b) { return a == b; })
        .def("__repr__", &tri_repr);

    py::class_<TrapezoidalFuzzy>(m, "TrapezoidalFuzzy")
        .def(py::init<double, double, double, double>(), py::arg("a1"), py::arg("a2"),
             py::arg("a3"), py::arg("a4"))
        .def_readonly("a1", &TrapezoidalFuzzy::a1)
        .def_readonly("a2", &TrapezoidalFuzzy::a2)
        .def_readonly("a3", &TrapezoidalFuzzy::a3)
        .def_readonly("a4", &TrapezoidalFuzzy::a4);

    py::enum_<ArithOp>(m, "ArithOp")
        .value("add", ArithOp::add)
        .value("sub", ArithOp::sub)
        .value("mul", ArithOp::mul)
        .value("div", ArithOp::div);

    m.def("tri_add", &tri_add);
    m.def("tri_sub", &tri_sub);
    m.def("tri_mul", &tri_mul);
    m.def("tri_div", &tri_div);
    m.def("tri_arith", &tri_arith, py::arg("a"), py::arg("b"), py::arg("op"));
    m.def("trap_arith", &trap_arith, py::arg("a"), py::arg("b"), py::arg("op"));
    m.def(
        "alpha_cut",
        [](const TriangularFuzzy& a, double alpha) {
            const Interval iv = alpha_cut(a, alpha);
            return py::make_tuple(iv.lo, iv.hi);
        },
        py::arg("a"), py::arg("alpha"));
    m.def("dis_numeric", &dis_numeric, py::arg("a"), py::arg("b"), py::arg("p") = 2.0,
          py::arg("q") = 0.5, py::arg("steps") = 1000);
    m.def("dis_tri", &dis_tri, py::arg("a"), py::arg("b"));
    m.def("defuzzify_centroid", &defuzzify_centroid, py::arg("a"));

    // --- network -------------------------------------------------------
    py::class_<Link>(m, "Link")
        .def_readonly("i", &Link::i)
        .def_readonly("j", &Link::j)
        .def_readonly("c0", &Link::c0)
        .def_readonly("u", &Link::u);

    py::class_<ODDemand>(m, "ODDemand")
        .def_readonly("o", &ODDemand::o)
        .def_readonly("d", &ODDemand::d)
        .def_readonly("q", &ODDemand::q);

    py::class_<Path>(m, "Path")
        .def_readonly("nodes", &Path::nodes)
        .def_readonly("links", &Path::links);

    py::class_<Network>(m, "Network")
        .def(py::init(&make_network), py::arg("nodes"), py::arg("links"), py::arg("demands"))
        .def_property_readonly("nodes", &Network::nodes)
        .def_property_readonly("links", &Network::links)
        .def_property_readonly("demands", &Network::demands);

    m.def("bpr_cost", &bpr_cost, py::arg("link"), py::arg("x"), py::arg("alpha") = 0.15,
          py::arg("beta") = 4.0);
    m.def("fuzzy_link_cost", &fuzzy_link_cost, py::arg("link"), py::arg("x"), py::arg("alpha_l"),
          py::arg("alpha_r"), py::arg("bpr_alpha") = 0.15, py::arg("bpr_beta") = 4.0);
    m.def("fuzzy_path_cost", &fuzzy_path_cost, py::arg("net"), py::arg("path"), py::arg("flows"),
          py::arg("alpha_l"), py::arg("alpha_r"), py::arg("bpr_alpha") = 0.15,
          py::arg("bpr_beta") = 4.0);
    m.def("make_path", &make_path, py::arg("net"), py::arg("nodes"));
    m.def(
        "enumerate_paths",
        [](const Network& net, int o, int d, double q, int max_hops) {
            const ODDemand od{o, d, q};
            return max_hops < 0 ? enumerate_paths(net, od) : enumerate_paths(net, od, max_hops);
        },
        py::arg("net"), py::arg("o"), py::arg("d"), py::arg("q") = 1.0, py::arg("max_hops") = -1);

    // --- fuzzy assignment ----------------------------------------------
    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("alpha_l", &SolverConfig::alpha_l)
        .def_readwrite("alpha_r", &SolverConfig::alpha_r)
        .def_readwrite("dt", &SolverConfig::dt)
        .def_readwrite("max_iters", &SolverConfig::max_iters)
        .def_readwrite("eps", &SolverConfig::eps)
        .def_readwrite("d0", &SolverConfig::d0)
        .def_readwrite("bpr_alpha", &SolverConfig::bpr_alpha)
        .def_readwrite("bpr_beta", &SolverConfig::bpr_beta)
        .def_readwrite("record_trace", &SolverConfig::record_trace);

    py::class_<PathReport>(m, "PathReport")
        .def_readonly("o", &PathReport::o)
        .def_readonly("d", &PathReport::d)
        .def_readonly("nodes", &PathReport::nodes)
        .def_readonly("flow", &PathReport::flow)
        .def_readonly("cost", &PathReport::cost);

    py::class_<TraceRow>(m, "TraceRow")
        .def_readonly("iteration", &TraceRow::iteration)
        .def_readonly("link_i", &TraceRow::link_i)
        .def_readonly("link_j", &TraceRow::link_j)
        .def_readonly("flow", &TraceRow::flow)
        .def_readonly("conductivity", &TraceRow::conductivity);

    py::class_<AssignmentResult>(m, "AssignmentResult")
        .def_readonly("flows", &AssignmentResult::flows)
        .def_readonly("per_od_flows", &AssignmentResult::per_od_flows)
        .def_readonly("paths", &AssignmentResult::paths)
        .def_readonly("wardrop_gap", &AssignmentResult::wardrop_gap)
        .def_readonly("iterations", &AssignmentResult::iterations)
        .def_readonly("converged", &AssignmentResult::converged)
        .def_readonly("trace", &AssignmentResult::trace);

    m.def("fue_run", &fue_run, py::arg("net"), py::arg("config") = SolverConfig{},
          py::call_guard<py::gil_scoped_release>());

    // --- crisp baseline ------------------------------------------------
    py::class_<FWConfig>(m, "FWConfig")
        .def(py::init<>())
        .def_readwrite("bpr_alpha", &FWConfig::bpr_alpha)
        .def_readwrite("bpr_beta", &FWConfig::bpr_beta)
        .def_readwrite("max_iters", &FWConfig::max_iters)
        .def_readwrite("rel_gap_tol", &FWConfig::rel_gap_tol)
        .def_readwrite("line_search_iters", &FWConfig::line_search_iters);

    py::class_<FWResult>(m, "FWResult")
        .def_readonly("flows", &FWResult::flows)
        .def_readonly("per_od_flows", &FWResult::per_od_flows)
        .def_readonly("paths", &FWResult::paths)
        .def_readonly("objective", &FWResult::objective)
        .def_readonly("rel_gap", &FWResult::rel_gap)
        .def_readonly("wardrop_gap", &FWResult::wardrop_gap)
        .def_readonly("iterations", &FWResult::iterations)
        .def_readonly("converged", &FWResult::converged)
        .def_readonly("objective_trace", &FWResult::objective_trace);

    m.def("fw_solve", &fw_solve, py::arg("net"), py::arg("config") = FWConfig{},
          py::call_guard<py::gil_scoped_release>());
    m.def("beckmann_objective", &beckmann_objective, py::arg("net"), py::arg("flows"),
          py::arg("bpr_alpha") = 0.15, py::arg("bpr_beta") = 4.0);

    // --- shortest path -------------------------------------------------
    py::class_<SPConfig>(m, "SPConfig")
        .def(py::init<>())
        .def_readwrite("d0", &SPConfig::d0)
        .def_readwrite("dt", &SPConfig::dt)
        .def_readwrite("eps", &SPConfig::eps)
        .def_readwrite("max_iters", &SPConfig::max_iters);

    m.def("shortest_path", &sp_run_network, py::arg("net"), py::arg("lengths"), py::arg("source"),
          py::arg("sink"), py::arg("i0") = 1.0, py::arg("config") = SPConfig{},
          py::call_guard<py::gil_scoped_release>());

    // --- ingestion -----------------------------------------------------
    m.def("fixture_names", &fixture_names);
    m.def("load_fixture", &load_fixture, py::arg("name"));
    m.def("load_network", &load_network, py::arg("path"));
    m.def("network_from_json", &network_from_json, py::arg("text"), py::arg("context") = "network");
    m.def("network_to_json", &network_to_json, py::arg("net"));
}
