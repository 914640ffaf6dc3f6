#include "pathrdf/engine.hpp"

#include <algorithm>

#include "pathrdf/rewrite.hpp"

namespace pathrdf {

std::optional<EntailmentMode> entailment_mode_from(const std::string& name) {
    if (name == "simple") return EntailmentMode::Simple;
    if (name == "rdfs-closure") return EntailmentMode::RdfsClosure;
    if (name == "rdfs-psparql") return EntailmentMode::RdfsPsparql;
    if (name == "rdfs-nsparql") return EntailmentMode::RdfsNsparql;
    if (name == "rdfs-cpsparql") return EntailmentMode::RdfsCpsparql;
    return std::nullopt;
}

std::string to_string(EntailmentMode m) {
    switch (m) {
        case EntailmentMode::Simple: return "simple";
        case EntailmentMode::RdfsClosure: return "rdfs-closure";
        case EntailmentMode::RdfsPsparql: return "rdfs-psparql";
        case EntailmentMode::RdfsNsparql: return "rdfs-nsparql";
        case EntailmentMode::RdfsCpsparql: return "rdfs-cpsparql";
    }
    return {};
}

namespace {

bool bind_position(const Term& pat, const Term& val, Map& sigma) {
    if (!pat.is_variable()) return pat == val;
    auto it = sigma.find(pat.lexical);
    if (it != sigma.end()) return it->second && *it->second == val;
    sigma[pat.lexical] = val;
    return true;
}

// Enumerates assignments for the free variables of a path predicate:
// regex variables range over the predicates of g, exported constraint
// heads over voc(g).
void enumerate_path_matches(PathEvaluator& ev, const TriplePattern& t,
                            std::vector<std::pair<std::string, bool>>& vars, std::size_t idx,
                            const PathExprPtr& expr, Map& partial, AnswerSet& out) {
    if (idx == vars.size()) {
        for (const auto& [a, b] : ev.eval_all_pairs(expr)) {
            Map sigma = partial;
            if (bind_position(t.s, a, sigma) && bind_position(t.o, b, sigma))
                out.insert(std::move(sigma));
        }
        return;
    }
    const auto& [name, is_regex] = vars[idx];
    const Graph& g = ev.graph();
    std::vector<Term> candidates =
        is_regex ? g.predicates() : std::vector<Term>(g.vocabulary().begin(), g.vocabulary().end());
    for (const Term& c : candidates) {
        partial[name] = c;
        enumerate_path_matches(ev, t, vars, idx + 1, substitute(expr, name, c), partial, out);
        partial.erase(name);
    }
}

}  // namespace

AnswerSet eval_triple(PathEvaluator& ev, const TriplePattern& t) {
    const Graph& g = ev.graph();
    AnswerSet out;
    using Kind = PathExpr::Kind;
    if (t.pred->kind == Kind::Atom || t.pred->kind == Kind::VarAtom) {
        const Term& p = t.pred->term;  // variable Term for VarAtom
        for (const Triple& d : g.triples()) {
            Map sigma;
            if (bind_position(t.s, d.s, sigma) && bind_position(p, d.p, sigma) &&
                bind_position(t.o, d.o, sigma))
                out.insert(std::move(sigma));
        }
        return out;
    }
    std::vector<std::pair<std::string, bool>> vars;
    for (const std::string& v : regex_vars(t.pred)) vars.push_back({v, true});
    for (const std::string& v : exported_vars(t.pred)) vars.push_back({v, false});
    Map partial;
    enumerate_path_matches(ev, t, vars, 0, t.pred, partial, out);
    return out;
}

AnswerSet eval_pattern(PathEvaluator& ev, const GraphPattern& p) {
    using Kind = GraphPattern::Kind;
    switch (p.kind) {
        case Kind::Bgp: {
            std::vector<TriplePattern> ordered = p.bgp;
            std::stable_sort(ordered.begin(), ordered.end(),
                             [](const TriplePattern& a, const TriplePattern& b) {
                                 auto nvars = [](const TriplePattern& t) {
                                     int n = 0;
                                     if (t.s.is_variable()) ++n;
                                     if (t.o.is_variable()) ++n;
                                     n += static_cast<int>(regex_vars(t.pred).size());
                                     n += static_cast<int>(exported_vars(t.pred).size());
                                     return n;
                                 };
                                 return nvars(a) < nvars(b);
                             });
            AnswerSet acc = {Map{}};
            for (const TriplePattern& t : ordered) acc = join(acc, eval_triple(ev, t));
            return acc;
        }
        case Kind::And:
            return join(eval_pattern(ev, *p.left), eval_pattern(ev, *p.right));
        case Kind::Union: {
            AnswerSet out = eval_pattern(ev, *p.left);
            AnswerSet r = eval_pattern(ev, *p.right);
            out.insert(r.begin(), r.end());
            return out;
        }
        case Kind::Opt: {
            AnswerSet l = eval_pattern(ev, *p.left);
            AnswerSet r = eval_pattern(ev, *p.right);
            AnswerSet out = join(l, r);
            AnswerSet d = difference(l, r);
            out.insert(d.begin(), d.end());
            return out;
        }
        case Kind::Filter: {
            AnswerSet out;
            for (const Map& m : eval_pattern(ev, *p.left))
                if (eval_filter(m, *p.filter)) out.insert(m);
            return out;
        }
    }
    return {};
}

AnswerSet answer_query(const Query& q, const Graph& g) {
    std::set<std::string> vars = pattern_vars(*q.where);
    for (const std::string& v : q.select)
        if (!vars.count(v))
            throw ParseError("SELECT variable ?" + v + " does not occur in the pattern");
    PathEvaluator ev(g);
    AnswerSet out;
    for (const Map& m : eval_pattern(ev, *q.where)) out.insert(restrict_complete(m, q.select));
    return out;
}

namespace {

void collect_bgp_triples(const GraphPattern& p, BasicGraphPattern& out) {
    switch (p.kind) {
        case GraphPattern::Kind::Bgp:
            for (const TriplePattern& t : p.bgp) {
                Term pred;
                if (t.pred->kind == PathExpr::Kind::Atom) pred = t.pred->term;
                else if (t.pred->kind == PathExpr::Kind::VarAtom) pred = t.pred->term;
                else continue;  // path predicates carry no closure context
                out.push_back({t.s, pred, t.o});
            }
            break;
        case GraphPattern::Kind::Filter:
            collect_bgp_triples(*p.left, out);
            break;
        default:
            collect_bgp_triples(*p.left, out);
            collect_bgp_triples(*p.right, out);
            break;
    }
}

}  // namespace

AnswerSet answers_via_closure(const Query& q, const Graph& g) {
    BasicGraphPattern h;
    collect_bgp_triples(*q.where, h);
    Graph closed = non_reflexive_closure(g, h);
    return answer_query(q, closed);
}

AnswerSet answers_with_mode(const Query& q, const Graph& g, EntailmentMode mode) {
    switch (mode) {
        case EntailmentMode::Simple:
            return answer_query(q, g);
        case EntailmentMode::RdfsClosure:
            return answers_via_closure(q, g);
        case EntailmentMode::RdfsPsparql:
            return answer_query(rewrite_query(q, RewriteMode::PsparqlTau), g);
        case EntailmentMode::RdfsNsparql:
            return answer_query(rewrite_query(q, RewriteMode::NsparqlPhi), g);
        case EntailmentMode::RdfsCpsparql:
            return answer_query(rewrite_query(q, RewriteMode::CpsparqlTau), g);
    }
    return {};
}

}  // namespace pathrdf
