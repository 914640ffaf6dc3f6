#include "pathrdf/path_eval.hpp"

#include <deque>

namespace pathrdf {

namespace {

PathExprPtr apply_bindings(const PathExprPtr& e, const Map& bindings) {
    PathExprPtr out = e;
    for (const auto& [name, value] : bindings)
        if (value) out = substitute(out, name, *value);
    return out;
}

}  // namespace

const Nfa& PathEvaluator::nfa_for(const PathExprPtr& e) {
    std::string key = to_string(*e);
    auto it = nfa_cache_.find(key);
    if (it != nfa_cache_.end()) return it->second;
    return nfa_cache_.emplace(std::move(key), build_nfa(e)).first->second;
}

bool PathEvaluator::letter_admits(const PathExprPtr& letter, const Term& label) {
    using Kind = PathExpr::Kind;
    switch (letter->kind) {
        case Kind::AxisStep:
            return true;
        case Kind::AxisTest:
        case Kind::Atom:
            return label == letter->term;
        case Kind::NegAtom:
            return label.is_iri() && label != letter->term;
        case Kind::AxisNested:
            return satisfying_nodes(letter->nested).count(label) > 0;
        case Kind::AxisConstrained:
            return constraint_sat(label, letter->constraint);
        case Kind::VarAtom:
            throw std::logic_error("unsubstituted path variable ?" + letter->term.lexical);
        default:
            throw std::logic_error("composite expression used as letter");
    }
}

// BFS over the product of g_ and nfa from ⟨source, start⟩. Nodes paired
// with the final state are added to accepted; if stop_at is given the
// search exits early once it is accepted.
void PathEvaluator::run(const Nfa& nfa, const Term& source, std::set<Term>& accepted,
                        const Term* stop_at) {
    if (!g_.contains_term(source)) return;
    int nq = static_cast<int>(nfa.state_count());
    std::map<Term, std::vector<bool>> seen;
    std::deque<std::pair<Term, int>> queue;

    auto push = [&](const Term& node, int q) {
        auto& row = seen[node];
        if (row.empty()) row.assign(static_cast<std::size_t>(nq), false);
        if (row[static_cast<std::size_t>(q)]) return false;
        row[static_cast<std::size_t>(q)] = true;
        queue.push_back({node, q});
        return true;
    };

    push(source, nfa.start);
    while (!queue.empty()) {
        auto [node, q] = queue.front();
        queue.pop_front();
        if (q == nfa.final) {
            accepted.insert(node);
            if (stop_at && node == *stop_at) return;
        }
        for (int r : nfa.eps[q]) push(node, r);
        if (nfa.labeled[q].empty()) continue;
        for (auto [ltr, to] : nfa.labeled[q]) {
            const PathExprPtr& letter = nfa.letters[static_cast<std::size_t>(ltr)];
            Axis axis = letter->axis;
            if (letter->kind == PathExpr::Kind::Atom || letter->kind == PathExpr::Kind::NegAtom)
                axis = Axis{AxisBase::Next, false};
            if (axis.base == AxisBase::Self) {
                if (letter_admits(letter, node)) push(node, to);
                continue;
            }
            for (const Graph::Entry& en : g_.entries(node, axis))
                if (letter_admits(letter, en.label)) push(en.target, to);
        }
    }
}

bool PathEvaluator::eval_pair(const PathExprPtr& e, const Term& a, const Term& b) {
    std::set<Term> accepted;
    run(nfa_for(e), a, accepted, &b);
    return accepted.count(b) > 0;
}

std::set<Term> PathEvaluator::eval_from(const PathExprPtr& e, const Term& source) {
    std::set<Term> accepted;
    run(nfa_for(e), source, accepted, nullptr);
    return accepted;
}

std::set<TermPair> PathEvaluator::eval_all_pairs(const PathExprPtr& e) {
    std::set<TermPair> out;
    const Nfa& nfa = nfa_for(e);
    for (const Term& u : g_.vocabulary()) {
        std::set<Term> accepted;
        run(nfa, u, accepted, nullptr);
        for (const Term& v : accepted) out.insert({u, v});
    }
    return out;
}

const std::set<Term>& PathEvaluator::satisfying_nodes(const PathExprPtr& e) {
    std::string key = to_string(*e);
    auto it = nodes_cache_.find(key);
    if (it != nodes_cache_.end()) return it->second;
    std::set<Term> nodes;
    const Nfa& nfa = nfa_for(e);
    for (const Term& u : g_.vocabulary()) {
        std::set<Term> accepted;
        run(nfa, u, accepted, nullptr);
        if (!accepted.empty()) nodes.insert(u);
    }
    return nodes_cache_.emplace(std::move(key), std::move(nodes)).first->second;
}

bool PathEvaluator::constraint_sat(const Term& candidate, const Constraint& c) {
    std::string key =
        to_string(*PathExpr::axis_constrained(Axis{AxisBase::Self, false}, c)) + "\x01" +
        to_string(candidate);
    auto it = sat_cache_.find(key);
    if (it != sat_cache_.end()) return it->second;

    bool ok;
    if (c.body.empty()) {
        Map bindings;
        bindings[c.head] = candidate;
        ok = eval_filter(bindings, *c.filter);
    } else {
        // The candidate is bound positionally: to the subject variable of a
        // one-triple body (the head as written may name the witness), to
        // the declared head otherwise.
        Map bindings;
        if (c.body.size() == 1) {
            const Term& s = c.body[0].s;
            if (s.is_variable()) {
                bindings[s.lexical] = candidate;
            } else if (s != candidate) {
                sat_cache_[key] = false;
                return false;
            }
        } else {
            bindings[c.head] = candidate;
        }
        ok = body_search(c.body, 0, bindings, c.filter);
    }
    sat_cache_[key] = ok;
    return ok;
}

bool PathEvaluator::body_search(const std::vector<ConstraintTriple>& body, std::size_t idx,
                                Map& bindings, const FilterPtr& filter) {
    if (idx == body.size()) return eval_filter(bindings, *filter);
    const ConstraintTriple& t = body[idx];
    PathExprPtr pred = apply_bindings(t.p, bindings);

    auto resolved = [&](const Term& pos) -> std::optional<Term> {
        if (!pos.is_variable()) return pos;
        auto it = bindings.find(pos.lexical);
        if (it != bindings.end() && it->second) return *it->second;
        return std::nullopt;
    };
    auto with_binding = [&](const Term& pos, const Term& value, auto&& cont) -> bool {
        if (!pos.is_variable()) return cont();
        bindings[pos.lexical] = value;
        bool ok = cont();
        bindings.erase(pos.lexical);
        return ok;
    };

    std::optional<Term> s = resolved(t.s);
    std::optional<Term> o = resolved(t.o);
    if (s) {
        if (o) {
            return eval_pair(pred, *s, *o) && body_search(body, idx + 1, bindings, filter);
        }
        for (const Term& w : eval_from(pred, *s))
            if (with_binding(t.o, w, [&] { return body_search(body, idx + 1, bindings, filter); }))
                return true;
        return false;
    }
    for (const auto& [a, b] : eval_all_pairs(pred)) {
        if (o && b != *o) continue;
        const Term& bb = b;
        if (with_binding(t.s, a, [&] {
                return with_binding(t.o, bb,
                                    [&] { return body_search(body, idx + 1, bindings, filter); });
            }))
            return true;
    }
    return false;
}

void PathEvaluator::collect_label_steps(const PathExprPtr& e,
                                        std::map<std::string, std::set<Term>>& out) {
    using Kind = PathExpr::Kind;
    switch (e->kind) {
        case Kind::Seq:
        case Kind::Alt:
            collect_label_steps(e->left, out);
            collect_label_steps(e->right, out);
            break;
        case Kind::Star:
        case Kind::Plus:
            collect_label_steps(e->left, out);
            break;
        case Kind::AxisNested: {
            collect_label_steps(e->nested, out);
            std::set<Term> sat;
            for (const Term& u : g_.vocabulary())
                if (satisfying_nodes(e->nested).count(u)) sat.insert(u);
            out[to_string(*e)] = std::move(sat);
            break;
        }
        case Kind::AxisConstrained: {
            for (const ConstraintTriple& t : e->constraint.body) collect_label_steps(t.p, out);
            std::set<Term> sat;
            for (const Term& u : g_.vocabulary())
                if (constraint_sat(u, e->constraint)) sat.insert(u);
            out[to_string(*e)] = std::move(sat);
            break;
        }
        default:
            break;
    }
}

std::map<std::string, std::set<Term>> PathEvaluator::label(const PathExprPtr& e) {
    std::map<std::string, std::set<Term>> out;
    collect_label_steps(e, out);
    return out;
}

}  // namespace pathrdf
