#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "iasl/classify.hpp"
#include "iasl/graph.hpp"
#include "iasl/labeling.hpp"
#include "iasl/search.hpp"
#include "iasl/suite.hpp"

namespace py = pybind11;

namespace {

iasl::TrivialMode mode_from(const std::string& mode) {
    if (mode == "plain") return iasl::TrivialMode::plain;
    if (mode == "indexer") return iasl::TrivialMode::indexer;
    throw iasl::InputError("unknown mode '" + mode + "': expected plain or indexer");
}

std::string verify_json(const iasl::Graph& g, const iasl::Labeling& f) {
    iasl::IaslCheck check = iasl::validate_iasl(g, f);
    iasl::ClassificationReport report = check.iasl.ok()
                                            ? iasl::classify(g, f)
                                            : iasl::ClassificationReport::not_an_iasl(check);
    return report.to_json().dump();
}

std::string search_json(const iasl::Graph& g, std::uint64_t bound) {
    iasl::SearchResult res = iasl::search_iasfl(g, bound);
    nlohmann::ordered_json j;
    j["status"] = res.sat() ? "sat" : "unsat";
    if (res.witness) {
        nlohmann::ordered_json w;
        w["ground"] = res.witness->ground->to_literal();
        nlohmann::ordered_json assign;
        for (const auto& v : g.vertices()) assign[v] = res.witness->at(v).to_literal();
        w["assignment"] = assign;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["explored"] = res.explored;
    j["searched_universe"] = res.searched_universe;
    j["reason"] = res.reason;
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "integer additive set-labelings: verification, construction, search";

    py::register_exception<iasl::InputError>(m, "InputError");

    py::class_<iasl::Graph>(m, "Graph")
        .def_static("parse", &iasl::Graph::parse, py::arg("text"))
        .def_property_readonly("vertices", &iasl::Graph::vertices)
        .def_property_readonly("edges",
                               [](const iasl::Graph& g) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (auto [u, v] : g.edges()) {
                                       out.emplace_back(g.name(u), g.name(v));
                                   }
                                   return out;
                               })
        .def("degree",
             [](const iasl::Graph& g, const std::string& v) { return g.degree(g.index_of(v)); })
        .def("to_text", &iasl::Graph::to_file_text)
        .def("__len__", &iasl::Graph::vertex_count)
        .def("__repr__", [](const iasl::Graph& g) {
            return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges>";
        });

    py::class_<iasl::Labeling>(m, "Labeling")
        .def_static("parse", &iasl::Labeling::parse, py::arg("text"), py::arg("graph"))
        .def_property_readonly("ground",
                               [](const iasl::Labeling& f) -> py::object {
                                   if (!f.ground) return py::none();
                                   return py::str(f.ground->to_literal());
                               })
        .def("items",
             [](const iasl::Labeling& f) {
                 py::dict out;
                 for (const auto& [name, label] : f.assignment) {
                     out[py::str(name)] = label.to_literal();
                 }
                 return out;
             })
        .def("to_text", &iasl::Labeling::to_file_text, py::arg("graph"));

    m.def("parse_graph", &iasl::Graph::parse, py::arg("text"));
    m.def(
        "parse_labeling",
        [](const std::string& text, const iasl::Graph& g) { return iasl::Labeling::parse(text, g); },
        py::arg("text"), py::arg("graph"));

    m.def(
        "sumset",
        [](const std::string& a, const std::string& b) {
            return iasl::sumset(iasl::IntSet::parse(a), iasl::IntSet::parse(b)).to_literal();
        },
        py::arg("a"), py::arg("b"), "Sumset of two comma-separated set literals.");

    m.def(
        "shape",
        [](const iasl::Graph& g) {
            auto s = iasl::graph_shape(g);
            py::dict d;
            d["is_path"] = s.is_path;
            d["is_cycle"] = s.is_cycle;
            d["is_star"] = s.is_star;
            d["is_complete"] = s.is_complete;
            d["is_complete_bipartite"] = s.is_complete_bipartite;
            d["is_complete_multipartite"] = s.is_complete_multipartite;
            d["odd_order"] = s.odd_order;
            d["pendant_vertices"] = s.pendant_vertices;
            d["center"] = s.center ? py::object(py::str(*s.center)) : py::object(py::none());
            return d;
        },
        py::arg("graph"));

    m.def(
        "build_max_iasf_graph",
        [](const std::string& ground) {
            return iasl::build_max_iasf_graph(iasl::IntSet::parse(ground));
        },
        py::arg("ground"),
        "Maximal graph admitting a set-filtered labeling over the given ground set, with "
        "its labeling.");

    m.def(
        "make_trivial",
        [](const iasl::Graph& g, const std::string& mode) {
            return iasl::make_trivial_iasl(g, mode_from(mode));
        },
        py::arg("graph"), py::arg("mode") = "plain");

    m.def(
        "extract_chain",
        [](const iasl::Labeling& f, const std::string& a) {
            std::vector<std::string> out;
            for (const auto& s : iasl::extract_chain(f, iasl::IntSet::parse(a))) {
                out.push_back(s.to_literal());
            }
            return out;
        },
        py::arg("labeling"), py::arg("label"));

    m.def("verify_json", &verify_json, py::arg("graph"), py::arg("labeling"));
    m.def(
        "classify_json",
        [](const iasl::Graph& g, const iasl::Labeling& f) {
            return iasl::classify(g, f).to_json().dump();
        },
        py::arg("graph"), py::arg("labeling"));
    m.def("search_json", &search_json, py::arg("graph"), py::arg("bound") = 8);
    m.def(
        "enumerate_count",
        [](const iasl::Graph& g, const std::string& ground, const std::string& predicate,
           bool force) {
            return iasl::enumerate_labelings(g, iasl::IntSet::parse(ground), predicate, nullptr,
                                             force);
        },
        py::arg("graph"), py::arg("ground"), py::arg("predicate"), py::arg("force") = false);
    m.def(
        "theorem_suite_json",
        [](int max_ground_size) { return iasl::run_theorem_suite(max_ground_size).to_json().dump(); },
        py::arg("max_ground_size") = 4);
}
