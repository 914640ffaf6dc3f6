#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathrdf/engine.hpp"
#include "pathrdf/ntriples.hpp"
#include "pathrdf/path_parser.hpp"
#include "pathrdf/query_parser.hpp"
#include "pathrdf/rewrite.hpp"

namespace {

using namespace pathrdf;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string term_text(const std::optional<Term>& t) {
    if (!t) return "";
    return to_string(*t);
}

int cmd_query(const std::string& data_file, const std::string& query_file,
              const std::string& semantics, const std::string& format) {
    auto mode = entailment_mode_from(semantics);
    if (!mode) throw ParseError("unknown semantics mode: " + semantics);
    Graph g = parse_ntriples(slurp(data_file));
    Query q = parse_query(slurp(query_file));
    AnswerSet answers = answers_with_mode(q, g, *mode);

    std::vector<std::vector<std::optional<Term>>> rows;
    for (const Map& m : answers) {
        std::vector<std::optional<Term>> row;
        for (const std::string& v : q.select) {
            auto it = m.find(v);
            row.push_back(it == m.end() ? std::nullopt : it->second);
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) {
                  for (std::size_t i = 0; i < a.size(); ++i) {
                      std::string x = term_text(a[i]), y = term_text(b[i]);
                      if (x != y) return x < y;
                  }
                  return false;
              });

    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json obj = nlohmann::json::object();
            for (std::size_t i = 0; i < q.select.size(); ++i) {
                if (row[i]) obj[q.select[i]] = to_string(*row[i]);
                else obj[q.select[i]] = nullptr;
            }
            out.push_back(std::move(obj));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) std::cout << '\t';
                std::cout << term_text(row[i]);
            }
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_closure(const std::string& data_file, bool reflexive, bool extended,
                const std::string& out_file) {
    Graph g = parse_ntriples(slurp(data_file));
    ClosureConfig cfg;
    cfg.reflexive = reflexive;
    cfg.extended = extended;
    Graph closed = closure(g, cfg);
    std::string text = serialize_ntriples(closed);
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        if (!out) throw ParseError("cannot open file: " + out_file);
        out << text;
    }
    std::cerr << "derived " << (closed.triples().size() - g.triples().size()) << " triples\n";
    return 0;
}

int cmd_rewrite(const std::string& query_file, const std::string& mode_name) {
    auto mode = rewrite_mode_from(mode_name);
    if (!mode) throw ParseError("unknown rewrite mode: " + mode_name);
    Query q = parse_query(slurp(query_file));
    std::cout << to_string(rewrite_query(q, *mode)) << "\n";
    return 0;
}

Graph chain_graph(std::size_t n) {
    std::vector<Triple> triples;
    Term p = Term::iri("ex:p");
    for (std::size_t i = 0; i < n; ++i)
        triples.push_back({Term::iri("ex:c" + std::to_string(i)), p,
                           Term::iri("ex:c" + std::to_string(i + 1))});
    return Graph::from_triples(std::move(triples));
}

Graph grid_graph(std::size_t n) {
    std::vector<Triple> triples;
    Term p = Term::iri("ex:p");
    auto cell = [](std::size_t i, std::size_t j) {
        return Term::iri("ex:g" + std::to_string(i) + "_" + std::to_string(j));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i + 1 < n) triples.push_back({cell(i, j), p, cell(i + 1, j)});
            if (j + 1 < n) triples.push_back({cell(i, j), p, cell(i, j + 1)});
        }
    return Graph::from_triples(std::move(triples));
}

int cmd_bench(const std::string& shape, const std::vector<std::size_t>& sizes,
              const std::string& expr_text) {
    PathExprPtr e = parse_path_any(expr_text);
    std::cout << "size,millis\n";
    for (std::size_t n : sizes) {
        Graph g = shape == "grid" ? grid_graph(n) : chain_graph(n);
        PathEvaluator ev(g);
        auto t0 = std::chrono::steady_clock::now();
        if (shape == "grid") {
            ev.eval_all_pairs(e);
        } else {
            // end-to-end reachability across the whole chain
            ev.eval_pair(e, Term::iri("ex:c0"), Term::iri("ex:c" + std::to_string(n)));
        }
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::cout << n << "," << ms << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path-expression query engine for RDF graphs"};
    app.require_subcommand(1);

    std::string data_file, query_file, out_file;
    std::string semantics = "simple", format = "tsv", mode_name, shape = "chain";
    std::string expr_text = "(next::<ex:p>)+";
    bool reflexive = false, extended = false;
    std::vector<std::size_t> sizes = {1000, 2000, 4000, 8000};

    auto* query = app.add_subcommand("query", "answer a query over a data graph");
    query->add_option("data", data_file, "N-Triples data file")->required();
    query->add_option("query", query_file, "query file")->required();
    query->add_option("--semantics", semantics,
                      "simple|rdfs-closure|rdfs-psparql|rdfs-nsparql|rdfs-cpsparql");
    query->add_option("--format", format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}));

    auto* clos = app.add_subcommand("closure", "saturate a graph under the schema rules");
    clos->add_option("data", data_file, "N-Triples data file")->required();
    clos->add_flag("--reflexive", reflexive, "include the reflexivity rules");
    clos->add_flag("--extended", extended, "full rule set instead of the core six");
    clos->add_option("--out", out_file, "output file (default stdout)");

    auto* rew = app.add_subcommand("rewrite", "rewrite a query into a path dialect");
    rew->add_option("query", query_file, "query file")->required();
    rew->add_option("--mode", mode_name, "psparql-tau|nsparql-phi|cpsparql-tau")->required();

    auto* bench = app.add_subcommand("bench", "time path evaluation on synthetic graphs");
    bench->add_option("--shape", shape, "chain|grid")->check(CLI::IsMember({"chain", "grid"}));
    bench->add_option("--sizes", sizes, "graph sizes")->delimiter(',');
    bench->add_option("--expr", expr_text, "path expression to evaluate");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(query)) return cmd_query(data_file, query_file, semantics, format);
        if (app.got_subcommand(clos)) return cmd_closure(data_file, reflexive, extended, out_file);
        if (app.got_subcommand(rew)) return cmd_rewrite(query_file, mode_name);
        if (app.got_subcommand(bench)) return cmd_bench(shape, sizes, expr_text);
    } catch (const DialectError& e) {
        std::cerr << "dialect error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
