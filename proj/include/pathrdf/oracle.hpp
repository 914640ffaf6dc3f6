#pragma once

#include <random>

#include "pathrdf/closure.hpp"
#include "pathrdf/denot.hpp"
#include "pathrdf/pattern.hpp"

namespace pathrdf {

/// Brute-force references used by the test suite. Deliberately written
/// against the definitions rather than sharing code with the engine.

/// Blind fixpoint: re-match every rule against every triple pair each
/// round until nothing new appears.
Graph naive_closure(const Graph& g, const ClosureConfig& cfg);

/// Bottom-up interpretation of a variable-free path expression.
std::set<std::pair<Term, Term>> naive_path_eval(const Graph& g, const PathExprPtr& e);

/// Generate-and-test pattern answers: per basic pattern, enumerate every
/// total assignment of its variables over voc(g) and keep the ones whose
/// instantiation holds; combine compound patterns by the set definitions.
/// Guarded: at most 6 variables and 40 vocabulary terms.
AnswerSet naive_pattern_eval(const Graph& g, const GraphPattern& p);

struct RandomGraphConfig {
    std::size_t nodes = 20;
    std::size_t edges = 40;
    double schema_fraction = 0.3;  // share of sc/sp/dom/range triples
    std::size_t properties = 4;
    std::size_t classes = 4;
};

/// Seeded genuine random graph: schema vocabulary appears only in the
/// predicate position, so closure-based answering stays complete.
Graph random_graph(std::mt19937& rng, const RandomGraphConfig& cfg);

/// Random nested regular expression (axis steps, tests, nesting, seq,
/// alt, star, plus) over the given edge labels.
PathExprPtr random_nested_expr(std::mt19937& rng, int depth, const std::vector<Term>& labels);

/// Random conjunctive query with constant predicates drawn from g and at
/// most max_triples triple patterns; selects every variable used.
Query random_bgp_query(std::mt19937& rng, const Graph& g, std::size_t max_triples);

}  // namespace pathrdf
