#pragma once

#include <map>

#include "pathrdf/nfa.hpp"

namespace pathrdf {

using TermPair = std::pair<Term, Term>;

/// Product-automaton evaluator for path expressions over one graph.
/// Constraint and nested-expression checks are memoized per node, so each
/// candidate label is tested once per constraint (the LABEL pre-pass).
/// Expressions must be variable-free: exported constraint heads and regex
/// variables are substituted away by the query engine before evaluation.
class PathEvaluator {
public:
    explicit PathEvaluator(const Graph& g) : g_(g) {}

    const Graph& graph() const { return g_; }

    /// ⟨a,b⟩ ∈ [[e]]_G?  Reachability of ⟨b, final⟩ from ⟨a, start⟩.
    bool eval_pair(const PathExprPtr& e, const Term& a, const Term& b);

    /// All ⟨a,b⟩ ∈ [[e]]_G, a ranging over voc(G).
    std::set<TermPair> eval_all_pairs(const PathExprPtr& e);

    /// Targets reachable from one source.
    std::set<Term> eval_from(const PathExprPtr& e, const Term& source);

    /// Nodes u with a non-empty [[e]] row, i.e. ∃w ⟨u,w⟩ ∈ [[e]]_G.
    const std::set<Term>& satisfying_nodes(const PathExprPtr& e);

    /// The LABEL table: for every nested or constrained step occurring in
    /// e (at any depth), the set of labels satisfying it.
    std::map<std::string, std::set<Term>> label(const PathExprPtr& e);

    /// Does candidate (a traversed label) satisfy ψ? Memoized.
    bool constraint_sat(const Term& candidate, const Constraint& c);

private:
    const Nfa& nfa_for(const PathExprPtr& e);
    bool letter_admits(const PathExprPtr& letter, const Term& label);
    void run(const Nfa& nfa, const Term& source, std::set<Term>& accepted,
             const Term* stop_at);
    bool body_search(const std::vector<ConstraintTriple>& body, std::size_t idx, Map& bindings,
                     const FilterPtr& filter);
    void collect_label_steps(const PathExprPtr& e,
                             std::map<std::string, std::set<Term>>& out);

    const Graph& g_;
    std::map<std::string, Nfa> nfa_cache_;
    std::map<std::string, bool> sat_cache_;
    std::map<std::string, std::set<Term>> nodes_cache_;
};

}  // namespace pathrdf
