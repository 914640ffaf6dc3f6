#include "pathrdf/rewrite.hpp"

namespace pathrdf {

std::optional<RewriteMode> rewrite_mode_from(const std::string& name) {
    if (name == "psparql-tau") return RewriteMode::PsparqlTau;
    if (name == "nsparql-phi") return RewriteMode::NsparqlPhi;
    if (name == "cpsparql-tau") return RewriteMode::CpsparqlTau;
    return std::nullopt;
}

std::string to_string(RewriteMode m) {
    switch (m) {
        case RewriteMode::PsparqlTau: return "psparql-tau";
        case RewriteMode::NsparqlPhi: return "nsparql-phi";
        case RewriteMode::CpsparqlTau: return "cpsparql-tau";
    }
    return {};
}

std::string FreshVars::next(const std::string& stem) {
    for (;;) {
        std::string name = stem + std::to_string(counter_++);
        if (taken_.insert(name).second) return name;
    }
}

namespace {

PathExprPtr next_test(const Term& a) {
    return PathExpr::axis_test(Axis{AxisBase::Next, false}, a);
}

PathExprPtr type_alternative() {
    using PE = PathExpr;
    PathExprPtr b1 = PE::seq(next_test(rdfs::type()), PE::star(next_test(rdfs::sc())));
    PathExprPtr b2 = PE::seq(
        PE::axis_step(Axis{AxisBase::Edge, false}),
        PE::seq(PE::star(next_test(rdfs::sp())),
                PE::seq(next_test(rdfs::dom()), PE::star(next_test(rdfs::sc())))));
    PathExprPtr b3 = PE::seq(
        PE::axis_step(Axis{AxisBase::Node, true}),
        PE::seq(PE::star(next_test(rdfs::sp())),
                PE::seq(next_test(rdfs::range()), PE::star(next_test(rdfs::sc())))));
    return PE::alt(PE::alt(b1, b2), b3);
}

}  // namespace

GraphPatternPtr tau_ps(const TriplePattern& t, FreshVars& fresh) {
    using PE = PathExpr;
    if (t.pred->kind != PE::Kind::Atom)
        return GraphPattern::make_bgp({t});  // variable predicates pass through
    const Term& p = t.pred->term;
    if (p == rdfs::sc())
        return GraphPattern::make_bgp({{t.s, PE::plus(PE::atom(rdfs::sc())), t.o}});
    if (p == rdfs::sp())
        return GraphPattern::make_bgp({{t.s, PE::plus(PE::atom(rdfs::sp())), t.o}});
    if (p == rdfs::type()) {
        auto b1 = GraphPattern::make_bgp(
            {{t.s, PE::seq(PE::atom(rdfs::type()), PE::star(PE::atom(rdfs::sc()))), t.o}});
        Term p2 = Term::variable(fresh.next("p"));
        Term y2 = Term::variable(fresh.next("y"));
        auto b2 = GraphPattern::make_bgp(
            {{t.s, PE::var_atom(p2), y2},
             {p2,
              PE::seq(PE::star(PE::atom(rdfs::sp())),
                      PE::seq(PE::atom(rdfs::dom()), PE::star(PE::atom(rdfs::sc())))),
              t.o}});
        Term p3 = Term::variable(fresh.next("p"));
        Term y3 = Term::variable(fresh.next("y"));
        auto b3 = GraphPattern::make_bgp(
            {{y3, PE::var_atom(p3), t.s},
             {p3,
              PE::seq(PE::star(PE::atom(rdfs::sp())),
                      PE::seq(PE::atom(rdfs::range()), PE::star(PE::atom(rdfs::sc())))),
              t.o}});
        return GraphPattern::uni(b1, GraphPattern::uni(b2, b3));
    }
    Term x = Term::variable(fresh.next("r"));
    return GraphPattern::make_bgp(
        {{t.s, PE::var_atom(x), t.o}, {x, PE::star(PE::atom(rdfs::sp())), p}});
}

TriplePattern phi(const TriplePattern& t) {
    using PE = PathExpr;
    if (t.pred->kind == PE::Kind::VarAtom)
        throw DialectError("variable predicate ?" + t.pred->term.lexical +
                           " cannot be expressed as a nested regular expression");
    if (t.pred->kind != PE::Kind::Atom)
        throw DialectError("predicate '" + to_string(*t.pred) + "' is not a plain SPARQL predicate");
    const Term& p = t.pred->term;
    PathExprPtr out;
    if (p == rdfs::sc()) out = PE::plus(next_test(rdfs::sc()));
    else if (p == rdfs::sp()) out = PE::plus(next_test(rdfs::sp()));
    else if (p == rdfs::dom()) out = next_test(rdfs::dom());
    else if (p == rdfs::range()) out = next_test(rdfs::range());
    else if (p == rdfs::type()) out = type_alternative();
    else
        out = PE::axis_nested(
            Axis{AxisBase::Next, false},
            PE::seq(PE::star(next_test(rdfs::sp())), PE::axis_test(Axis{AxisBase::Self, false}, p)));
    return {t.s, out, t.o};
}

TriplePattern tau_cp(const TriplePattern& t, FreshVars& fresh) {
    using PE = PathExpr;
    if (t.pred->kind == PE::Kind::VarAtom) {
        Constraint c;
        c.head = t.pred->term.lexical;
        c.exported = true;
        c.filter = FilterExpr::truth();
        return {t.s, PE::axis_constrained(Axis{AxisBase::Next, false}, std::move(c)), t.o};
    }
    if (t.pred->kind != PE::Kind::Atom)
        throw DialectError("predicate '" + to_string(*t.pred) + "' is not a plain SPARQL predicate");
    const Term& p = t.pred->term;
    PathExprPtr out;
    if (p == rdfs::sc()) out = PE::plus(next_test(rdfs::sc()));
    else if (p == rdfs::sp()) out = PE::plus(next_test(rdfs::sp()));
    else if (p == rdfs::dom()) out = next_test(rdfs::dom());
    else if (p == rdfs::range()) out = next_test(rdfs::range());
    else if (p == rdfs::type()) out = type_alternative();
    else {
        Constraint c;
        c.head = fresh.next("x");
        c.exported = false;
        c.body.push_back({Term::variable(c.head), PE::star(next_test(rdfs::sp())), p});
        c.filter = FilterExpr::truth();
        out = PE::axis_constrained(Axis{AxisBase::Next, false}, std::move(c));
    }
    return {t.s, out, t.o};
}

PathExprPtr trans(const PathExprPtr& e) {
    using PE = PathExpr;
    switch (e->kind) {
        case PE::Kind::Seq:
            return PE::seq(trans(e->left), trans(e->right));
        case PE::Kind::Alt:
            return PE::alt(trans(e->left), trans(e->right));
        case PE::Kind::Star:
            return PE::star(trans(e->left));
        case PE::Kind::Plus:
            return PE::plus(trans(e->left));
        case PE::Kind::AxisNested: {
            const PathExprPtr& inner = e->nested;
            Constraint c;
            c.head = "x";
            c.exported = false;
            c.filter = FilterExpr::truth();
            if (inner->kind == PE::Kind::Seq && inner->right->kind == PE::Kind::AxisTest &&
                inner->right->axis == Axis{AxisBase::Self, false}) {
                c.body.push_back({Term::variable("x"), trans(inner->left), inner->right->term});
            } else {
                c.body.push_back({Term::variable("x"), trans(inner), Term::variable("y")});
            }
            return PE::axis_constrained(e->axis, std::move(c));
        }
        default:
            return e;
    }
}

namespace {

GraphPatternPtr rewrite_pattern(const GraphPattern& p, RewriteMode mode, FreshVars& fresh) {
    using Kind = GraphPattern::Kind;
    switch (p.kind) {
        case Kind::Bgp: {
            std::vector<TriplePattern> plain;
            std::vector<GraphPatternPtr> compound;
            for (const TriplePattern& t : p.bgp) {
                // predicates already written in a path dialect are kept as-is
                if (t.pred->kind != PathExpr::Kind::Atom &&
                    t.pred->kind != PathExpr::Kind::VarAtom) {
                    plain.push_back(t);
                    continue;
                }
                switch (mode) {
                    case RewriteMode::PsparqlTau: {
                        GraphPatternPtr r = tau_ps(t, fresh);
                        if (r->kind == Kind::Bgp)
                            plain.insert(plain.end(), r->bgp.begin(), r->bgp.end());
                        else
                            compound.push_back(r);
                        break;
                    }
                    case RewriteMode::NsparqlPhi:
                        plain.push_back(phi(t));
                        break;
                    case RewriteMode::CpsparqlTau:
                        plain.push_back(tau_cp(t, fresh));
                        break;
                }
            }
            GraphPatternPtr out;
            if (!plain.empty() || compound.empty()) out = GraphPattern::make_bgp(std::move(plain));
            for (GraphPatternPtr& c : compound)
                out = out ? GraphPattern::conj(out, std::move(c)) : std::move(c);
            return out;
        }
        case Kind::And:
            return GraphPattern::conj(rewrite_pattern(*p.left, mode, fresh),
                                      rewrite_pattern(*p.right, mode, fresh));
        case Kind::Union:
            return GraphPattern::uni(rewrite_pattern(*p.left, mode, fresh),
                                     rewrite_pattern(*p.right, mode, fresh));
        case Kind::Opt:
            return GraphPattern::opt(rewrite_pattern(*p.left, mode, fresh),
                                     rewrite_pattern(*p.right, mode, fresh));
        case Kind::Filter:
            return GraphPattern::filtered(rewrite_pattern(*p.left, mode, fresh), p.filter);
    }
    return nullptr;
}

}  // namespace

Query rewrite_query(const Query& q, RewriteMode mode) {
    FreshVars fresh(pattern_vars(*q.where));
    Query out;
    out.select = q.select;
    out.where = rewrite_pattern(*q.where, mode, fresh);
    return out;
}

}  // namespace pathrdf
