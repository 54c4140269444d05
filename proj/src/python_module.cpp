#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rootline/catalog.hpp"
#include "rootline/embedding.hpp"
#include "rootline/graph_io.hpp"
#include "rootline/mutation.hpp"
#include "rootline/recognition.hpp"

namespace py = pybind11;
using namespace rootline;

namespace {

SimpleGraph as_graph(const py::handle& h) {
    if (py::isinstance<py::str>(h)) return parse_graph6(h.cast<std::string>());
    return h.cast<SimpleGraph>();
}

Family family_from_string(const std::string& name) {
    if (name == "A") return Family::A;
    if (name == "D") return Family::D;
    if (name == "E") return Family::E;
    if (name == "cycle") return Family::Cycle;
    if (name == "clique") return Family::Clique;
    if (name == "star") return Family::Star;
    throw std::invalid_argument("unknown family: " + name);
}

ForbiddenList list_from_string(const std::string& name) {
    if (auto l = forbidden_list_from_string(name)) return *l;
    throw std::invalid_argument("unknown list: " + name);
}

std::vector<std::string> graph6_list(const std::vector<CanonicalForm>& forms) {
    std::vector<std::string> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(f.graph6());
    return out;
}

py::object json_loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

py::object decision(const ListDecision& d) {
    py::dict out;
    out["member"] = d.member;
    if (d.root) out["certificate"] = json_loads(certificate_to_json(*d.root));
    if (d.witness) out["certificate"] = json_loads(certificate_to_json(*d.witness));
    return std::move(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Line graph recognition through quadratic forms over F2";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    static py::exception<ClassBoundExceeded> bound_error(m, "ClassBoundExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ClassBoundExceeded& e) {
            py::set_error(bound_error, e.what());
        } catch (const DisconnectedInput& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    py::class_<SimpleGraph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("graph6", &emit_graph6)
        .def("canonical_graph6", [](const SimpleGraph& g) { return canonical(g).graph6(); })
        .def_property_readonly("order", &SimpleGraph::order)
        .def("edges", &SimpleGraph::edges)
        .def("add_edge", &SimpleGraph::add_edge)
        .def("adjacent", &SimpleGraph::adjacent)
        .def("degree", &SimpleGraph::degree)
        .def("neighbors", &SimpleGraph::neighbors)
        .def("__len__", &SimpleGraph::order)
        .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
        .def("__repr__", [](const SimpleGraph& g) { return "Graph('" + emit_graph6(g) + "')"; });

    m.def("named_graph", [](const std::string& family, int n) { return named_graph(family_from_string(family), n); },
          py::arg("family"), py::arg("n"));
    m.def("line_graph", [](int n, const std::vector<std::tuple<int, int, int>>& edges) {
        MultiGraph root(n);
        for (const auto& [u, v, k] : edges) root.add_edge(u, v, k);
        return line_graph(root).graph;
    }, py::arg("n"), py::arg("edges"), "Line graph of a multigraph given as (u, v, multiplicity) triples.");
    m.def("is_isomorphic", [](py::handle a, py::handle b) { return is_isomorphic(as_graph(a), as_graph(b)); });

    m.def("recognize", [](py::handle g) { return json_loads(certificate_to_json(recognize_multigraph_line_graph(as_graph(g)))); },
          py::arg("graph"), "Root or forbidden-subgraph certificate for a connected graph.");
    m.def("is_line_graph", [](py::handle g) {
        return std::holds_alternative<RootCertificate>(recognize_multigraph_line_graph(as_graph(g)));
    }, py::arg("graph"));
    m.def("is_ordinary_line_graph", [](py::handle g) { return decision(is_ordinary_line_graph(as_graph(g))); }, py::arg("graph"));
    m.def("is_generalized_line_graph", [](py::handle g) { return decision(is_generalized_line_graph(as_graph(g))); }, py::arg("graph"));
    m.def("recognize_via_tree", [](py::handle g) { return recognize_via_tree(as_graph(g)); }, py::arg("graph"));
    m.def("find_forbidden_witness", [](py::handle g, const std::string& list) -> py::object {
        const auto w = find_forbidden_witness(as_graph(g), list_from_string(list));
        if (!w) return py::none();
        return json_loads(certificate_to_json(*w));
    }, py::arg("graph"), py::arg("list") = "e6");
    m.def("verify_certificate", [](py::handle g, py::handle cert) {
        const std::string text = py::isinstance<py::str>(cert) ? cert.cast<std::string>()
                                                               : py::module_::import("json").attr("dumps")(cert).cast<std::string>();
        return verify_certificate(as_graph(g), certificate_from_json(text));
    }, py::arg("graph"), py::arg("certificate"));

    m.def("embedding_summary", [](py::handle h) {
        const auto g = as_graph(h);
        const auto s = summarize(universal_embedding(g).space());
        const auto min = minimal_embedding(g);
        py::dict out;
        out["dim"] = s.dim;
        out["f_radical_dim"] = s.f_radical_dim;
        out["isotropic_radical_dim"] = s.isotropic_radical_dim;
        out["type"] = s.type ? py::object(py::str(to_string(*s.type))) : py::none();
        out["minimal_dim"] = min.embedded.space().dim();
        out["twin_classes"] = twin_classes(g);
        if (min.embedded.space().dim() <= kMaxClosureDim) {
            out["closure_size"] = cotriangular_closure(min.embedded).size();
        } else {
            out["closure_size"] = py::none();
        }
        return out;
    }, py::arg("graph"));

    m.def("mutate", [](py::handle g, int v, int w) { return graph_mutation(as_graph(g), v, w); }, py::arg("graph"), py::arg("v"), py::arg("w"));
    m.def("equivalence_class", [](py::handle g, std::size_t max_classes) { return graph6_list(equivalence_class(as_graph(g), max_classes)); },
          py::arg("graph"), py::arg("max_classes") = kDefaultMaxClasses);
    m.def("reduce_to_tree", [](py::handle h) {
        const auto r = reduce_to_tree(as_graph(h));
        return py::make_tuple(r.tree, r.log.steps);
    }, py::arg("graph"), "Equivalent tree (same labels) and the list of (v, w) mutation steps.");
    m.def("replay", [](py::handle g, const std::vector<std::pair<int, int>>& steps) { return replay(as_graph(g), TransformationLog{steps}); },
          py::arg("graph"), py::arg("steps"));

    m.def("catalog", [](const std::string& list) { return graph6_list(catalog().list(list_from_string(list))); }, py::arg("list") = "e6");
    m.def("catalog_index", [](py::handle g) { return catalog_index(as_graph(g)); }, py::arg("graph"));
}
