#pragma once

#include "pathrdf/path_expr.hpp"

namespace pathrdf {

/// ε-NFA over the atomic alphabet T(R). Letters are the atomic sub-
/// expressions of the compiled path expression, deduplicated by their
/// serialized form.
struct Nfa {
    int start = 0;
    int final = 0;
    std::vector<PathExprPtr> letters;
    // per-state edges
    std::vector<std::vector<int>> eps;                       // ε successors
    std::vector<std::vector<std::pair<int, int>>> labeled;   // (letter, to)

    std::size_t state_count() const { return eps.size(); }

    /// ε-closure of a state set.
    std::set<int> closure(const std::set<int>& states) const;

    /// True iff the word (as letter indexes) is accepted. Test helper.
    bool accepts(const std::vector<int>& word) const;
};

/// Thompson construction. Plus is compiled as e/e*.
Nfa build_nfa(const PathExprPtr& e);

}  // namespace pathrdf
