#pragma once

#include "pathrdf/path_expr.hpp"

namespace pathrdf {

/// ⟨source, target, item⟩ — the relational form of a path interpretation,
/// where item is the component traversed by the last step (the predicate
/// for next, the object for edge, the subject for node, the node itself
/// for self).
struct PathTriple {
    Term x, y, z;
    auto operator<=>(const PathTriple&) const = default;
};

/// Bottom-up evaluation of the interpretation equations, with Star as a
/// Kleene fixpoint seeded by [[self]] restricted to voc(g). Reference
/// oracle for the automaton evaluator; exponential-free but unoptimized.
/// e must be variable-free.
std::set<PathTriple> denot_eval(const Graph& g, const PathExprPtr& e);

/// Pair projection of denot_eval.
std::set<std::pair<Term, Term>> denot_pairs(const Graph& g, const PathExprPtr& e);

}  // namespace pathrdf
