#pragma once

#include <string>

#include "pathrdf/graph.hpp"

namespace pathrdf {

/// Line-based N-Triples-like parser. Each non-blank, non-comment line is
/// "subj pred obj ." with IRIs as bare tokens or <...>, literals quoted.
/// Hard-wired prefixes dm:, rn:, rdf:, rdfs:, ex: plus @prefix lines.
/// rdf:type, rdfs:subClassOf etc. are canonicalized to the short ρdf IRIs.
Graph parse_ntriples(const std::string& text);

/// Parses a single term token (bare IRI, <iri>, "literal", ?var, _:blank).
Term parse_term_token(const std::string& tok);

/// Canonical short form of the ρdf vocabulary IRIs (rdf:type → type, …);
/// other IRIs are returned unchanged.
std::string canonical_iri(const std::string& iri);

std::string serialize_ntriples(const Graph& g);

}  // namespace pathrdf
