#include "pathrdf/oracle.hpp"

#include "pathrdf/filter.hpp"

namespace pathrdf {

namespace {

void rule_conclusions(const Triple& a, const Triple& b, std::set<Triple>& out) {
    const Term& sp = rdfs::sp();
    const Term& sc = rdfs::sc();
    const Term& type = rdfs::type();

    if (a.p == sp && b.p == sp && a.o == b.s) out.insert({a.s, sp, b.o});
    if (a.p == sp && b.p == a.s) out.insert({b.s, a.o, b.o});
    if (a.p == sc && b.p == sc && a.o == b.s) out.insert({a.s, sc, b.o});
    if (a.p == type && b.p == sc && a.o == b.s) out.insert({a.s, type, b.o});
    if (a.p == rdfs::dom() && b.p == a.s) out.insert({b.s, type, a.o});
    if (a.p == rdfs::range() && b.p == a.s) out.insert({b.o, type, a.o});
}

void unary_conclusions(const Triple& t, const ClosureConfig& cfg, std::set<Triple>& out) {
    if (!cfg.extended) return;
    const Term& type = rdfs::type();
    out.insert({t.p, type, rdfs::prop()});
    if (t.p != type) return;
    if (t.o == rdfs::prop() && cfg.reflexive) out.insert({t.s, rdfs::sp(), t.s});
    if (t.o == rdfs::cls()) {
        out.insert({t.s, rdfs::sc(), rdfs::res()});
        if (cfg.reflexive) out.insert({t.s, rdfs::sc(), t.s});
    }
    if (t.o == rdfs::cont_mp()) out.insert({t.s, rdfs::sp(), rdfs::member()});
    if (t.o == rdfs::datatype()) out.insert({t.s, rdfs::sc(), rdfs::literal()});
}

std::size_t container_bound(const Graph& g, const BasicGraphPattern& h) {
    auto idx = [](const Term& t) -> std::size_t {
        if (!t.is_iri() || t.lexical.rfind("rdf:_", 0) != 0) return 0;
        try {
            return std::stoul(t.lexical.substr(5));
        } catch (...) {
            return 0;
        }
    };
    std::size_t k = 0;
    for (const Triple& t : g.triples()) k = std::max({k, idx(t.s), idx(t.p), idx(t.o)});
    for (const Triple& t : h) k = std::max({k, idx(t.s), idx(t.p), idx(t.o)});
    return k;
}

}  // namespace

Graph naive_closure(const Graph& g, const ClosureConfig& cfg) {
    if (cfg.axiomatic && !cfg.context)
        throw std::invalid_argument("axiomatic closure requires a context pattern");
    std::set<Triple> store(g.triples().begin(), g.triples().end());
    if (cfg.axiomatic)
        for (const Triple& t : axiomatic_triples(container_bound(g, *cfg.context)))
            store.insert(t);
    for (;;) {
        std::set<Triple> fresh;
        for (const Triple& a : store) {
            unary_conclusions(a, cfg, fresh);
            for (const Triple& b : store) rule_conclusions(a, b, fresh);
        }
        std::size_t before = store.size();
        for (const Triple& t : fresh)
            if (!t.s.is_literal()) store.insert(t);
        if (store.size() > cfg.cap)
            throw ResourceLimitError("closure exceeded the derived-triple cap of " +
                                     std::to_string(cfg.cap));
        if (store.size() == before) break;
    }
    return Graph::from_triples({store.begin(), store.end()});
}

std::set<std::pair<Term, Term>> naive_path_eval(const Graph& g, const PathExprPtr& e) {
    return denot_pairs(g, e);
}

namespace {

bool map_compatible(const Map& a, const Map& b) {
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        if (it != b.end() && it->second != v) return false;
    }
    return true;
}

Map map_merge(const Map& a, const Map& b) {
    Map out = a;
    out.insert(b.begin(), b.end());
    return out;
}

Term apply(const Map& m, const Term& t) {
    if (!t.is_variable()) return t;
    auto it = m.find(t.lexical);
    if (it == m.end() || !it->second) throw std::logic_error("unbound oracle variable");
    return *it->second;
}

bool triple_holds(const Graph& g, const TriplePattern& t, const Map& m) {
    Term s = apply(m, t.s);
    Term o = apply(m, t.o);
    if (t.pred->kind == PathExpr::Kind::Atom) return g.contains({s, t.pred->term, o});
    if (t.pred->kind == PathExpr::Kind::VarAtom)
        return g.contains({s, apply(m, t.pred->term), o});
    PathExprPtr e = t.pred;
    for (const auto& [name, value] : m)
        if (value) e = substitute(e, name, *value);
    auto pairs = denot_pairs(g, e);
    return pairs.count({s, o}) > 0;
}

AnswerSet eval_bgp(const Graph& g, const std::vector<TriplePattern>& bgp) {
    std::set<std::string> vars;
    for (const TriplePattern& t : bgp) {
        if (t.s.is_variable()) vars.insert(t.s.lexical);
        if (t.o.is_variable()) vars.insert(t.o.lexical);
        for (const std::string& v : regex_vars(t.pred)) vars.insert(v);
        for (const std::string& v : exported_vars(t.pred)) vars.insert(v);
    }
    std::vector<std::string> order(vars.begin(), vars.end());
    std::vector<Term> voc(g.vocabulary().begin(), g.vocabulary().end());
    AnswerSet out;
    if (order.empty()) {
        // a ground pattern answers with the empty map iff it holds
        for (const TriplePattern& t : bgp)
            if (!triple_holds(g, t, {})) return out;
        out.insert(Map{});
        return out;
    }
    if (voc.empty()) return out;
    std::vector<std::size_t> pick(order.size(), 0);
    for (;;) {
        Map m;
        for (std::size_t i = 0; i < order.size(); ++i) m[order[i]] = voc[pick[i]];
        bool ok = true;
        for (const TriplePattern& t : bgp)
            if (!triple_holds(g, t, m)) {
                ok = false;
                break;
            }
        if (ok) out.insert(std::move(m));
        // odometer over assignments
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < voc.size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return out;
}

AnswerSet eval_rec(const Graph& g, const GraphPattern& p) {
    using Kind = GraphPattern::Kind;
    switch (p.kind) {
        case Kind::Bgp:
            return eval_bgp(g, p.bgp);
        case Kind::And: {
            AnswerSet l = eval_rec(g, *p.left), r = eval_rec(g, *p.right), out;
            for (const Map& a : l)
                for (const Map& b : r)
                    if (map_compatible(a, b)) out.insert(map_merge(a, b));
            return out;
        }
        case Kind::Union: {
            AnswerSet l = eval_rec(g, *p.left), r = eval_rec(g, *p.right);
            l.insert(r.begin(), r.end());
            return l;
        }
        case Kind::Opt: {
            AnswerSet l = eval_rec(g, *p.left), r = eval_rec(g, *p.right), out;
            for (const Map& a : l) {
                bool any = false;
                for (const Map& b : r)
                    if (map_compatible(a, b)) {
                        out.insert(map_merge(a, b));
                        any = true;
                    }
                if (!any) out.insert(a);
            }
            return out;
        }
        case Kind::Filter: {
            AnswerSet l = eval_rec(g, *p.left), out;
            for (const Map& a : l)
                if (eval_filter(a, *p.filter)) out.insert(a);
            return out;
        }
    }
    return {};
}

}  // namespace

AnswerSet naive_pattern_eval(const Graph& g, const GraphPattern& p) {
    if (pattern_vars(p).size() > 6)
        throw ResourceLimitError("naive pattern evaluation limited to 6 variables");
    if (g.vocabulary().size() > 40)
        throw ResourceLimitError("naive pattern evaluation limited to 40 vocabulary terms");
    return eval_rec(g, p);
}

Graph random_graph(std::mt19937& rng, const RandomGraphConfig& cfg) {
    auto node = [](std::size_t i) { return Term::iri("ex:n" + std::to_string(i)); };
    auto cls = [](std::size_t i) { return Term::iri("ex:C" + std::to_string(i)); };
    auto prop = [](std::size_t i) { return Term::iri("ex:p" + std::to_string(i)); };
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    auto pick = [&](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    std::vector<Triple> triples;
    for (std::size_t i = 0; i < cfg.edges; ++i) {
        if (coin(rng) < cfg.schema_fraction) {
            switch (pick(4)) {
                case 0: triples.push_back({cls(pick(cfg.classes)), rdfs::sc(), cls(pick(cfg.classes))}); break;
                case 1: triples.push_back({prop(pick(cfg.properties)), rdfs::sp(), prop(pick(cfg.properties))}); break;
                case 2: triples.push_back({prop(pick(cfg.properties)), rdfs::dom(), cls(pick(cfg.classes))}); break;
                default: triples.push_back({prop(pick(cfg.properties)), rdfs::range(), cls(pick(cfg.classes))}); break;
            }
        } else if (coin(rng) < 0.25) {
            triples.push_back({node(pick(cfg.nodes)), rdfs::type(), cls(pick(cfg.classes))});
        } else {
            triples.push_back({node(pick(cfg.nodes)), prop(pick(cfg.properties)), node(pick(cfg.nodes))});
        }
    }
    return Graph::from_triples(std::move(triples));
}

PathExprPtr random_nested_expr(std::mt19937& rng, int depth, const std::vector<Term>& labels) {
    auto pick = [&](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    auto axis = [&] {
        AxisBase bases[] = {AxisBase::Self, AxisBase::Next, AxisBase::Edge, AxisBase::Node};
        AxisBase b = bases[pick(4)];
        bool inv = b != AxisBase::Self && pick(2) == 1;
        return Axis{b, inv};
    };
    if (depth <= 0 || pick(3) == 0) {
        switch (pick(3)) {
            case 0: return PathExpr::axis_step(axis());
            case 1: return PathExpr::axis_test(axis(), labels[pick(labels.size())]);
            default:
                if (depth > 0)
                    return PathExpr::axis_nested(axis(),
                                                 random_nested_expr(rng, depth - 1, labels));
                return PathExpr::axis_test(axis(), labels[pick(labels.size())]);
        }
    }
    switch (pick(5)) {
        case 0:
            return PathExpr::seq(random_nested_expr(rng, depth - 1, labels),
                                 random_nested_expr(rng, depth - 1, labels));
        case 1:
            return PathExpr::alt(random_nested_expr(rng, depth - 1, labels),
                                 random_nested_expr(rng, depth - 1, labels));
        case 2:
            return PathExpr::star(random_nested_expr(rng, depth - 1, labels));
        case 3:
            return PathExpr::plus(random_nested_expr(rng, depth - 1, labels));
        default:
            return PathExpr::axis_nested(axis(), random_nested_expr(rng, depth - 1, labels));
    }
}

Query random_bgp_query(std::mt19937& rng, const Graph& g, std::size_t max_triples) {
    auto pick = [&](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    std::vector<Term> preds = g.predicates();
    std::vector<Term> nodes;
    for (const Term& t : g.vocabulary())
        if (!rdfs::is_rho_df(t)) nodes.push_back(t);
    static const char* var_names[] = {"a", "b", "c", "d"};
    auto term = [&] {
        if (nodes.empty() || pick(3) < 2) return Term::variable(var_names[pick(4)]);
        return nodes[pick(nodes.size())];
    };
    std::size_t count = 1 + pick(max_triples);
    std::vector<TriplePattern> bgp;
    for (std::size_t i = 0; i < count; ++i) {
        Term s = term();
        Term o = term();
        Term p = preds.empty() ? Term::iri("ex:p0") : preds[pick(preds.size())];
        bgp.push_back({s, PathExpr::atom(p), o});
    }
    Query q;
    q.where = GraphPattern::make_bgp(std::move(bgp));
    for (const std::string& v : pattern_vars(*q.where)) q.select.push_back(v);
    if (q.select.empty()) {
        // keep the query well-formed: SELECT needs a pattern variable
        Term v = Term::variable("a");
        auto t = q.where->bgp.empty()
                     ? TriplePattern{v, PathExpr::atom(preds.empty() ? Term::iri("ex:p0")
                                                                     : preds[0]),
                                     v}
                     : TriplePattern{v, q.where->bgp.front().pred, q.where->bgp.front().o};
        auto bgp2 = q.where->bgp;
        bgp2.push_back(t);
        q.where = GraphPattern::make_bgp(std::move(bgp2));
        q.select.push_back("a");
    }
    return q;
}

}  // namespace pathrdf
