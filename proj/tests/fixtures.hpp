#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "pathrdf/ntriples.hpp"

namespace testutil {

inline std::string read_file(const std::string& rel) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + rel);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline pathrdf::Graph load_graph(const std::string& rel) {
    return pathrdf::parse_ntriples(read_file(rel));
}

inline pathrdf::Graph genes() { return load_graph("data/genes.nt"); }

inline pathrdf::Graph genes_with_schema() {
    return pathrdf::parse_ntriples(read_file("data/genes.nt") + read_file("data/genes_schema.nt"));
}

inline pathrdf::Graph travel() { return load_graph("data/travel.nt"); }

}  // namespace testutil
