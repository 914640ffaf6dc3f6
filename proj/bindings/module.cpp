#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathrdf/engine.hpp"
#include "pathrdf/ntriples.hpp"
#include "pathrdf/path_parser.hpp"
#include "pathrdf/query_parser.hpp"
#include "pathrdf/rewrite.hpp"

namespace py = pybind11;
using namespace pathrdf;

namespace {

std::vector<std::map<std::string, std::optional<std::string>>> answer(
    const std::string& data, const std::string& query, const std::string& semantics) {
    auto mode = entailment_mode_from(semantics);
    if (!mode) throw std::invalid_argument("unknown semantics mode: " + semantics);
    Graph g = parse_ntriples(data);
    Query q = parse_query(query);
    std::vector<std::map<std::string, std::optional<std::string>>> out;
    for (const Map& m : answers_with_mode(q, g, *mode)) {
        std::map<std::string, std::optional<std::string>> row;
        for (const std::string& v : q.select) {
            auto it = m.find(v);
            if (it != m.end() && it->second) row[v] = to_string(*it->second);
            else row[v] = std::nullopt;
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string closure_text(const std::string& data, bool reflexive, bool extended) {
    Graph g = parse_ntriples(data);
    ClosureConfig cfg;
    cfg.reflexive = reflexive;
    cfg.extended = extended;
    return serialize_ntriples(closure(g, cfg));
}

std::string rewrite_text(const std::string& query, const std::string& mode_name) {
    auto mode = rewrite_mode_from(mode_name);
    if (!mode) throw std::invalid_argument("unknown rewrite mode: " + mode_name);
    return to_string(rewrite_query(parse_query(query), *mode));
}

std::vector<std::pair<std::string, std::string>> eval_path(const std::string& data,
                                                           const std::string& expr) {
    Graph g = parse_ntriples(data);
    PathEvaluator ev(g);
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : ev.eval_all_pairs(parse_path_any(expr)))
        out.emplace_back(to_string(a), to_string(b));
    return out;
}

}  // namespace

PYBIND11_MODULE(_pathrdf, m) {
    m.doc() = "path-expression query answering over RDF graphs";

    py::register_exception<ParseError>(m, "QueryParseError");
    py::register_exception<DialectError>(m, "DialectError");

    m.def("answer", &answer, py::arg("data"), py::arg("query"),
          py::arg("semantics") = "simple",
          "Answer a SELECT query over N-Triples data; rows are dicts keyed "
          "by the selected variable names, with None for unbound values.");
    m.def("closure", &closure_text, py::arg("data"), py::arg("reflexive") = false,
          py::arg("extended") = false,
          "Saturate a graph under the schema rules; returns N-Triples text.");
    m.def("rewrite", &rewrite_text, py::arg("query"), py::arg("mode"),
          "Rewrite a query into a path dialect (psparql-tau, nsparql-phi, "
          "cpsparql-tau); returns the query text.");
    m.def("eval_path", &eval_path, py::arg("data"), py::arg("expr"),
          "All node pairs connected by the path expression.");
}
