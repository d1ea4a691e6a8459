#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mainspectra/bounds.hpp"
#include "mainspectra/census.hpp"
#include "mainspectra/claims.hpp"
#include "mainspectra/equitable.hpp"
#include "mainspectra/families.hpp"
#include "mainspectra/spectral.hpp"

namespace py = pybind11;
using namespace mainspectra;

namespace {

py::dict surd_dict(const Surd& s) {
    py::dict d;
    d["s"] = s.s;
    d["D"] = s.D;
    d["sign"] = s.sign;
    d["text"] = s.str();
    d["approx"] = s.approx();
    return d;
}

py::dict signature_dict(const MainSignature& sig) {
    py::dict d;
    d["main_count"] = sig.main_count;
    if (sig.pair) {
        d["a"] = sig.pair->a;
        d["b"] = sig.pair->b;
        d["lambda1"] = surd_dict(*sig.lambda1);
        d["lambda2"] = surd_dict(*sig.lambda2);
    }
    return d;
}

py::dict construction_dict(const ConstructedGraph& c) {
    py::dict d;
    d["graph6"] = write_graph6(c.graph);
    d["graph"] = c.graph;
    d["cells"] = c.partition.cells();
    d["quotient"] = c.quotient.c;
    return d;
}

std::optional<MainPair> filter_of(std::optional<std::int64_t> a, std::optional<std::int64_t> b) {
    if (a.has_value() != b.has_value()) throw py::value_error("give both a and b, or neither");
    if (!a) return std::nullopt;
    return MainPair{*a, *b};
}

}  // namespace

PYBIND11_MODULE(_mainspectra, m) {
    m.doc() = "Exact analysis of graphs with exactly two main eigenvalues";

    py::register_exception<Error>(m, "MainspectraError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph::from_edges(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("graph6", [](const Graph& g) { return write_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("is_connected", [](const Graph& g) { return is_connected(g); })
        .def("__eq__", [](const Graph& x, const Graph& y) { return x == y; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + write_graph6(g) + "')"; });

    m.def("two_main_signature", [](const Graph& g) { return signature_dict(two_main_signature(g)); });
    m.def("count_main_eigenvalues", &count_main_eigenvalues);
    m.def("canonical_key", &canonical_key);

    m.def("is_feasible", [](std::int64_t a, std::int64_t b) { return is_feasible(a, b).has_value(); });
    m.def("infeasibility_reason", &infeasibility_reason);
    m.def(
        "witness",
        [](std::int64_t a, std::int64_t b, const std::string& variant) {
            const Witness w = variant.empty() ? witness(a, b) : witness(a, b, variant);
            py::dict d = construction_dict(w.construction);
            d["recipe"] = describe(w.recipe);
            d["signature"] = signature_dict(w.signature);
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("variant") = "");

    m.def("t_tree", &t_tree);
    m.def("double_star", &double_star);
    m.def("family_a", [](int i, int j, int s) { return construction_dict(family_a(i, j, s)); }, py::arg("i"),
          py::arg("j"), py::arg("s") = 1);
    m.def("family_b15", [](int t) { return family_b15(t).graph; });

    m.def("coarsest_equitable", [](const Graph& g) {
        const EquitableResult r = coarsest_equitable(g);
        py::dict d;
        d["cells"] = r.partition.cells();
        d["quotient"] = r.quotient.c;
        return d;
    });
    m.def("has_two_cell_equitable", &has_two_cell_equitable);

    m.def("degree_bounds", [](std::int64_t a, std::int64_t b, std::int64_t delta) {
        auto [lo, hi] = degree_bounds(a, b, delta);
        return py::make_tuple(surd_dict(lo), surd_dict(hi));
    });
    m.def("audit_bounds", [](const Graph& g) {
        const BoundsReport r = audit_bounds(g);
        py::dict d;
        d["a"] = r.pair.a;
        d["b"] = r.pair.b;
        d["delta_star"] = surd_dict(r.lower);
        d["Delta_star"] = surd_dict(r.upper);
        d["violations"] = r.violations;
        d["ok"] = r.ok();
        return d;
    });

    m.def(
        "enumerate",
        [](int max_n, std::optional<std::int64_t> a, std::optional<std::int64_t> b, int min_n, bool labeled) {
            CensusOptions o;
            o.max_n = max_n;
            o.min_n = min_n;
            o.filter = filter_of(a, b);
            o.dedup = !labeled;
            std::vector<CensusRecord> recs;
            {
                py::gil_scoped_release release;
                recs = collect_members(o);
            }
            py::list out;
            for (const auto& r : recs) {
                py::dict d = signature_dict(r.signature);
                d["graph6"] = r.g6;
                d["n"] = r.n;
                d["m"] = r.m;
                d["canonical"] = r.canonical;
                out.append(d);
            }
            return out;
        },
        py::arg("max_n"), py::arg("a") = py::none(), py::arg("b") = py::none(), py::arg("min_n") = 2,
        py::arg("labeled") = false);

    m.def("claim_ids", &claim_ids);
    m.def(
        "verify_claim",
        [](const std::string& claim, int max_n) {
            ClaimScope scope;
            scope.max_n = max_n;
            VerificationReport r;
            {
                py::gil_scoped_release release;
                r = verify_claim(claim, scope);
            }
            py::dict d;
            d["claim"] = r.claim;
            d["scope"] = r.scope;
            d["pass"] = r.pass;
            d["checked"] = r.checked;
            d["members"] = r.members;
            d["counterexamples"] = r.counterexamples;
            d["detail"] = r.detail;
            return d;
        },
        py::arg("claim"), py::arg("max_n") = 8);
}
