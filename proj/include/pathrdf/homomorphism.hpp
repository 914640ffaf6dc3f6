#pragma once

#include "pathrdf/answer.hpp"
#include "pathrdf/graph.hpp"

namespace pathrdf {

/// A basic graph pattern: triples whose positions may be variables,
/// including the predicate.
using BasicGraphPattern = std::vector<Triple>;

/// All maps σ with dom(σ) = variables of bgp such that every instantiated
/// triple is in g. Backtracking over triples ordered by ascending candidate
/// count, ties by input order.
AnswerSet find_homomorphisms(const Graph& g, const BasicGraphPattern& bgp);

std::set<std::string> pattern_variables(const BasicGraphPattern& bgp);

}  // namespace pathrdf
