#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xspec/certificate.hpp"
#include "xspec/checkers.hpp"
#include "xspec/families.hpp"
#include "xspec/graph.hpp"
#include "xspec/graph6.hpp"
#include "xspec/harness.hpp"
#include "xspec/isomorphism.hpp"
#include "xspec/spectra.hpp"

namespace py = pybind11;
using namespace xspec;

namespace {

FamilyParams params(int n, int k, int delta, int s) { return FamilyParams{n, k, delta, s}; }

py::tuple verdict(const Verdict& v) {
    return py::make_tuple(v.holds, v.certificate ? py::cast(to_json(*v.certificate)) : py::none());
}

PlummerMethod plummer_method(const std::string& name) {
    if (name == "auto") return PlummerMethod::Auto;
    if (name == "enumeration") return PlummerMethod::Enumeration;
    if (name == "surplus") return PlummerMethod::Surplus;
    throw std::invalid_argument("unknown Plummer method '" + name + "'");
}

py::object fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectral thresholds for matching extension, factors and Hamiltonicity";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
    py::register_exception<harness::UsageError>(m, "UsageError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int order, const std::vector<Edge>& edges) { return Graph(order, edges); }),
             py::arg("order"), py::arg("edges") = std::vector<Edge>{})
        .def_static("from_graph6", [](const std::string& s) { return graph6_decode(s); })
        .def("graph6", [](const Graph& g) { return graph6_encode(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("is_bipartite", [](const Graph& g) { return two_coloring(g).has_value(); })
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, Vertex v) {
            auto n = g.neighbors(v);
            return std::vector<Vertex>(n.begin(), n.end());
        })
        .def("is_connected", [](const Graph& g) { return is_connected(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a.without_bipartition() == b.without_bipartition(); })
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
        });

    m.def("construct", [](const std::string& family, int n, int k, int delta, int s) {
        return construct(parse_family(family), params(n, k, delta, s));
    }, py::arg("family"), py::arg("n"), py::arg("k") = 0, py::arg("delta") = 0, py::arg("s") = 0,
       "Extremal family member; families: kext-general, kext-bipartite, kfactor-bipartite, kfc-general, "
       "hamilton-bipartite.");

    m.def("spectral_radius", [](const Graph& g) { return spectral_radius(g).rho; });
    m.def("spectrum", [](const Graph& g) { return full_spectrum(SymMatrix::adjacency(g)); },
          "All adjacency eigenvalues, descending.");
    m.def("fms_bound", [](const Graph& g) { return fms_bound(g).bound; });
    m.def("sqrt_m_bound", [](const Graph& g) { return sqrt_m_bound(ensure_bipartition(g)); });
    m.def("isomorphic", [](const Graph& a, const Graph& b) { return isomorphic_small(a, b); });

    m.def("threshold_F", &threshold_F, py::arg("k"), py::arg("delta"));
    m.def("threshold_rho", [](const std::string& family, int n, int k, int delta, int s) {
        return threshold_rho(parse_family(family), params(n, k, delta, s)).rho_star;
    }, py::arg("family"), py::arg("n"), py::arg("k") = 0, py::arg("delta") = 0, py::arg("s") = 0);
    m.def("recognize", [](const std::string& family, const Graph& g, int n, int k, int delta, int s) {
        return recognize(parse_family(family), params(n, k, delta, s), g);
    }, py::arg("family"), py::arg("graph"), py::arg("n"), py::arg("k") = 0, py::arg("delta") = 0, py::arg("s") = 0);
    m.def("bipartite_family_charpoly", [](int n, int k, int s) {
        const auto q = charpoly_bipartite_family(n, k, s);
        return py::make_tuple(fraction(q.c4), fraction(q.c2), fraction(q.c0));
    }, py::arg("n"), py::arg("k"), py::arg("s"), "Coefficients (c4, c2, c0) of c4 x^4 + c2 x^2 + c0.");

    m.def("max_matching_size", [](const Graph& g) { return max_matching_general(g, 64).size(); });
    m.def("k_extendable", [](const Graph& g, int k, const std::string& method) {
        if (method == "definitional") return verdict(is_k_extendable_definitional(g, k));
        if (method == "chen") return verdict(is_k_extendable_chen(g, k));
        return verdict(is_k_extendable_plummer(ensure_bipartition(g), k, plummer_method(method)));
    }, py::arg("graph"), py::arg("k"), py::arg("method") = "chen",
       "Returns (holds, certificate JSON or None); method: definitional, chen, auto, enumeration, surplus.");
    m.def("k_factor", [](const Graph& g, int k) { return verdict(find_k_factor_flow(ensure_bipartition(g), k)); },
          py::arg("graph"), py::arg("k"));
    m.def("k_factor_ore", [](const Graph& g, int k) {
        return verdict(has_f_factor_ore(ensure_bipartition(g), FactorSpec::constant(g.order(), k)));
    }, py::arg("graph"), py::arg("k"));
    m.def("k_factor_critical", [](const Graph& g, int k) { return verdict(is_k_factor_critical(g, k)); },
          py::arg("graph"), py::arg("k"));
    m.def("hamiltonian", [](const Graph& g) { return verdict(hamiltonian_cycle(g)); });

    m.def("run", [](const std::string& mode, const std::string& theorem, const std::string& family,
                    const std::string& property, std::optional<int> n, std::optional<int> k,
                    std::optional<int> delta, std::optional<int> s, long samples, std::uint64_t seed, double tol,
                    int jobs, int exhaustive_limit, const std::string& input, const std::string& format) {
        harness::ExperimentConfig cfg;
        cfg.mode = harness::parse_mode(mode);
        cfg.theorem = theorem;
        cfg.family = family;
        cfg.property = property;
        cfg.n = n;
        cfg.k = k;
        cfg.delta = delta;
        cfg.s = s;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.tol = tol;
        cfg.jobs = jobs;
        cfg.exhaustive_limit = exhaustive_limit;
        cfg.format = harness::parse_format(format);
        std::istringstream in(input);
        std::pair<int, std::string> out;
        {
            py::gil_scoped_release release;
            if (cfg.mode == harness::Mode::Construct) {
                out = {0, harness::cmd_construct(cfg) + "\n"};
            } else {
                harness::Report r;
                if (cfg.mode == harness::Mode::Rho) r = harness::cmd_rho(cfg, in);
                else if (cfg.mode == harness::Mode::Check) r = harness::cmd_check(cfg, in);
                else if (cfg.mode == harness::Mode::Verify) r = harness::cmd_verify(cfg);
                else if (cfg.mode == harness::Mode::CrossCheck) r = harness::cmd_cross_check(cfg);
                else r = harness::cmd_scan(cfg, in);
                out = {r.exit_code, harness::render(r, cfg.format)};
            }
        }
        return py::make_tuple(out.first, out.second);
    }, py::arg("mode"), py::kw_only(), py::arg("theorem") = "", py::arg("family") = "", py::arg("property") = "",
       py::arg("n") = py::none(), py::arg("k") = py::none(), py::arg("delta") = py::none(),
       py::arg("s") = py::none(), py::arg("samples") = 1000, py::arg("seed") = 1, py::arg("tol") = 1e-8,
       py::arg("jobs") = 1, py::arg("exhaustive_limit") = kExhaustiveLimit, py::arg("input") = "",
       py::arg("format") = "json",
       "Runs one harness subcommand; returns (exit_code, rendered report).");
}
