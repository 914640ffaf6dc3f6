#include "pathrdf/denot.hpp"

namespace pathrdf {

namespace {

using Rel = std::set<PathTriple>;

Rel axis_relation(const Graph& g, const Axis& axis) {
    Rel out;
    if (axis.base == AxisBase::Self) {
        for (const Term& u : g.vocabulary()) out.insert({u, u, u});
        return out;
    }
    for (const Triple& t : g.triples()) {
        PathTriple p;
        switch (axis.base) {
            case AxisBase::Next: p = {t.s, t.o, t.p}; break;
            case AxisBase::Edge: p = {t.s, t.p, t.o}; break;
            case AxisBase::Node: p = {t.p, t.o, t.s}; break;
            case AxisBase::Self: break;
        }
        if (axis.inverted) std::swap(p.x, p.y);
        out.insert(p);
    }
    return out;
}

Rel compose(const Rel& a, const Rel& b) {
    Rel out;
    for (const PathTriple& p : a)
        for (const PathTriple& q : b)
            if (p.y == q.x) out.insert({p.x, q.y, q.z});
    return out;
}

struct DenotEvaluator {
    const Graph& g;

    Rel eval(const PathExprPtr& e) {
        using Kind = PathExpr::Kind;
        switch (e->kind) {
            case Kind::AxisStep:
                return axis_relation(g, e->axis);
            case Kind::AxisTest: {
                Rel out;
                for (const PathTriple& p : axis_relation(g, e->axis))
                    if (p.z == e->term) out.insert(p);
                return out;
            }
            case Kind::Atom: {
                Rel out;
                for (const PathTriple& p : axis_relation(g, Axis{AxisBase::Next, false}))
                    if (p.z == e->term) out.insert(p);
                return out;
            }
            case Kind::NegAtom: {
                Rel out;
                for (const PathTriple& p : axis_relation(g, Axis{AxisBase::Next, false}))
                    if (p.z.is_iri() && p.z != e->term) out.insert(p);
                return out;
            }
            case Kind::Epsilon:
                return axis_relation(g, Axis{AxisBase::Self, false});
            case Kind::AxisNested: {
                Rel sub = eval(e->nested);
                std::set<Term> good;
                for (const PathTriple& q : sub) good.insert(q.x);
                Rel out;
                for (const PathTriple& p : axis_relation(g, e->axis))
                    if (good.count(p.z)) out.insert(p);
                return out;
            }
            case Kind::AxisConstrained: {
                Rel out;
                for (const PathTriple& p : axis_relation(g, e->axis))
                    if (sat(p.z, e->constraint)) out.insert(p);
                return out;
            }
            case Kind::Seq:
                return compose(eval(e->left), eval(e->right));
            case Kind::Alt: {
                Rel out = eval(e->left);
                Rel r = eval(e->right);
                out.insert(r.begin(), r.end());
                return out;
            }
            case Kind::Star: {
                Rel base = eval(e->left);
                Rel out = axis_relation(g, Axis{AxisBase::Self, false});
                for (;;) {
                    Rel next = out;
                    next.insert(base.begin(), base.end());
                    Rel step = compose(out, base);
                    next.insert(step.begin(), step.end());
                    if (next == out) return out;
                    out = std::move(next);
                }
            }
            case Kind::Plus:
                return compose(eval(e->left), eval(PathExpr::star(e->left)));
            case Kind::VarAtom:
                throw std::logic_error("denot_eval on expression with variables");
        }
        return {};
    }

    // Same positional constraint reading as the automaton evaluator: the
    // candidate item binds the subject of a one-triple body, the declared
    // head otherwise.
    bool sat(const Term& candidate, const Constraint& c) {
        if (c.body.empty()) {
            Map m;
            m[c.head] = candidate;
            return eval_filter(m, *c.filter);
        }
        Map m;
        if (c.body.size() == 1) {
            const Term& s = c.body[0].s;
            if (s.is_variable()) m[s.lexical] = candidate;
            else if (s != candidate) return false;
        } else {
            m[c.head] = candidate;
        }
        return search(c.body, 0, m, c.filter);
    }

    bool search(const std::vector<ConstraintTriple>& body, std::size_t idx, Map& m,
                const FilterPtr& filter) {
        if (idx == body.size()) return eval_filter(m, *filter);
        const ConstraintTriple& bt = body[idx];
        PathExprPtr pred = bt.p;
        for (const auto& [name, value] : m)
            if (value) pred = substitute(pred, name, *value);
        Rel rel = eval(pred);
        auto matches = [&](const Term& pat, const Term& val) {
            if (!pat.is_variable()) return pat == val;
            auto it = m.find(pat.lexical);
            return it == m.end() || !it->second || *it->second == val;
        };
        for (const PathTriple& p : rel) {
            if (!matches(bt.s, p.x) || !matches(bt.o, p.y)) continue;
            Map saved = m;
            if (bt.s.is_variable()) m[bt.s.lexical] = p.x;
            if (bt.o.is_variable()) m[bt.o.lexical] = p.y;
            if (search(body, idx + 1, m, filter)) {
                m = saved;
                return true;
            }
            m = saved;
        }
        return false;
    }
};

}  // namespace

std::set<PathTriple> denot_eval(const Graph& g, const PathExprPtr& e) {
    DenotEvaluator ev{g};
    return ev.eval(e);
}

std::set<std::pair<Term, Term>> denot_pairs(const Graph& g, const PathExprPtr& e) {
    std::set<std::pair<Term, Term>> out;
    for (const PathTriple& p : denot_eval(g, e)) out.insert({p.x, p.y});
    return out;
}

}  // namespace pathrdf
