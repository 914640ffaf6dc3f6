#include "pathrdf/path_expr.hpp"

#include <algorithm>

namespace pathrdf {

std::string to_string(Dialect d) {
    switch (d) {
        case Dialect::Psparql: return "psparql";
        case Dialect::Nsparql: return "nsparql";
        case Dialect::Cpsparql: return "cpsparql";
        case Dialect::CpsparqlFull: return "cpsparql-full";
    }
    return {};
}

namespace {

std::shared_ptr<PathExpr> mk(PathExpr::Kind k) {
    auto e = std::make_shared<PathExpr>();
    e->kind = k;
    return e;
}

}  // namespace

PathExprPtr PathExpr::axis_step(Axis a) {
    auto e = mk(Kind::AxisStep);
    e->axis = a;
    return e;
}

PathExprPtr PathExpr::axis_test(Axis a, Term iri) {
    auto e = mk(Kind::AxisTest);
    e->axis = a;
    e->term = std::move(iri);
    return e;
}

PathExprPtr PathExpr::axis_nested(Axis a, PathExprPtr nre) {
    auto e = mk(Kind::AxisNested);
    e->axis = a;
    e->nested = std::move(nre);
    return e;
}

PathExprPtr PathExpr::axis_constrained(Axis a, Constraint c) {
    auto e = mk(Kind::AxisConstrained);
    e->axis = a;
    if (!c.filter) c.filter = FilterExpr::truth();
    e->constraint = std::move(c);
    return e;
}

PathExprPtr PathExpr::atom(Term iri) {
    auto e = mk(Kind::Atom);
    e->term = std::move(iri);
    return e;
}

PathExprPtr PathExpr::neg_atom(Term iri) {
    auto e = mk(Kind::NegAtom);
    e->term = std::move(iri);
    return e;
}

PathExprPtr PathExpr::var_atom(Term var) {
    auto e = mk(Kind::VarAtom);
    e->term = std::move(var);
    return e;
}

PathExprPtr PathExpr::epsilon() {
    static const PathExprPtr e = mk(Kind::Epsilon);
    return e;
}

PathExprPtr PathExpr::seq(PathExprPtr l, PathExprPtr r) {
    auto e = mk(Kind::Seq);
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

PathExprPtr PathExpr::alt(PathExprPtr l, PathExprPtr r) {
    auto e = mk(Kind::Alt);
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

PathExprPtr PathExpr::star(PathExprPtr e0) {
    auto e = mk(Kind::Star);
    e->left = std::move(e0);
    return e;
}

PathExprPtr PathExpr::plus(PathExprPtr e0) {
    auto e = mk(Kind::Plus);
    e->left = std::move(e0);
    return e;
}

namespace {

bool filter_is_true(const FilterPtr& f) {
    return !f || f->kind == FilterExpr::Kind::True;
}

std::string constraint_to_string(const Constraint& c) {
    std::string out = "?" + c.head + ":";
    if (c.body.empty()) {
        out += filter_is_true(c.filter) ? "TRUE" : "TRUE";
    } else {
        out += "{";
        bool first = true;
        for (const ConstraintTriple& t : c.body) {
            if (!first) out += " . ";
            first = false;
            out += to_string(t.s) + " " + to_string(*t.p) + " " + to_string(t.o);
        }
        out += "}";
    }
    if (!filter_is_true(c.filter)) out += " FILTER(" + to_string(*c.filter) + ")";
    return out;
}

// precedence: 3 atomic and postfix, 2 sequence, 1 alternative
int precedence(const PathExpr& e) {
    switch (e.kind) {
        case PathExpr::Kind::Seq: return 2;
        case PathExpr::Kind::Alt: return 1;
        default: return 3;
    }
}

std::string child_str(const PathExprPtr& c, int min_prec) {
    std::string s = to_string(*c);
    if (precedence(*c) < min_prec) return "(" + s + ")";
    return s;
}

// Star/Plus operands are parenthesized unless they are bare atoms, so
// axis steps print in the (next::sc)+ shape.
std::string postfix_operand(const PathExprPtr& c) {
    switch (c->kind) {
        case PathExpr::Kind::Atom:
        case PathExpr::Kind::NegAtom:
        case PathExpr::Kind::VarAtom:
        case PathExpr::Kind::Epsilon:
            return to_string(*c);
        default:
            return "(" + to_string(*c) + ")";
    }
}

}  // namespace

std::string to_string(const PathExpr& e) {
    using Kind = PathExpr::Kind;
    switch (e.kind) {
        case Kind::AxisStep:
            return to_string(e.axis);
        case Kind::AxisTest:
            return to_string(e.axis) + "::" + to_string(e.term);
        case Kind::AxisNested:
            return to_string(e.axis) + "::[" + to_string(*e.nested) + "]";
        case Kind::AxisConstrained:
            if (e.constraint.exported)
                return to_string(e.axis) + "::]" + constraint_to_string(e.constraint) + "[";
            return to_string(e.axis) + "::[" + constraint_to_string(e.constraint) + "]";
        case Kind::Atom:
            return to_string(e.term);
        case Kind::NegAtom:
            return "!" + to_string(e.term);
        case Kind::VarAtom:
            return to_string(e.term);
        case Kind::Epsilon:
            return "eps";
        case Kind::Seq:
            return child_str(e.left, 2) + "/" + child_str(e.right, 2);
        case Kind::Alt:
            return child_str(e.left, 1) + "|" + child_str(e.right, 1);
        case Kind::Star:
            return postfix_operand(e.left) + "*";
        case Kind::Plus:
            return postfix_operand(e.left) + "+";
    }
    return {};
}

std::string to_string(const PathExprPtr& e) { return to_string(*e); }

bool expr_equal(const PathExprPtr& a, const PathExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return to_string(*a) == to_string(*b);
}

namespace {

void collect_terms(const PathExprPtr& e, std::vector<PathExprPtr>& out, std::set<std::string>& seen) {
    switch (e->kind) {
        case PathExpr::Kind::Seq:
        case PathExpr::Kind::Alt:
            collect_terms(e->left, out, seen);
            collect_terms(e->right, out, seen);
            break;
        case PathExpr::Kind::Star:
        case PathExpr::Kind::Plus:
            collect_terms(e->left, out, seen);
            break;
        case PathExpr::Kind::Epsilon:
            break;
        default:
            if (seen.insert(to_string(*e)).second) out.push_back(e);
    }
}

}  // namespace

std::vector<PathExprPtr> terms_of(const PathExprPtr& e) {
    std::vector<PathExprPtr> out;
    std::set<std::string> seen;
    collect_terms(e, out, seen);
    return out;
}

std::set<std::string> exported_vars(const PathExprPtr& e) {
    std::set<std::string> out;
    switch (e->kind) {
        case PathExpr::Kind::AxisConstrained:
            if (e->constraint.exported) out.insert(e->constraint.head);
            for (const ConstraintTriple& t : e->constraint.body) {
                auto sub = exported_vars(t.p);
                out.insert(sub.begin(), sub.end());
            }
            break;
        case PathExpr::Kind::AxisNested: {
            out = exported_vars(e->nested);
            break;
        }
        case PathExpr::Kind::Seq:
        case PathExpr::Kind::Alt: {
            out = exported_vars(e->left);
            auto r = exported_vars(e->right);
            out.insert(r.begin(), r.end());
            break;
        }
        case PathExpr::Kind::Star:
        case PathExpr::Kind::Plus:
            out = exported_vars(e->left);
            break;
        default:
            break;
    }
    return out;
}

std::set<std::string> regex_vars(const PathExprPtr& e) {
    std::set<std::string> out;
    switch (e->kind) {
        case PathExpr::Kind::VarAtom:
            out.insert(e->term.lexical);
            break;
        case PathExpr::Kind::Seq:
        case PathExpr::Kind::Alt: {
            out = regex_vars(e->left);
            auto r = regex_vars(e->right);
            out.insert(r.begin(), r.end());
            break;
        }
        case PathExpr::Kind::Star:
        case PathExpr::Kind::Plus:
            out = regex_vars(e->left);
            break;
        default:
            break;
    }
    return out;
}

PathExprPtr substitute(const PathExprPtr& e, const std::string& name, const Term& value) {
    using Kind = PathExpr::Kind;
    switch (e->kind) {
        case Kind::VarAtom:
            if (e->term.lexical == name) return PathExpr::atom(value);
            return e;
        case Kind::AxisConstrained: {
            const Constraint& c = e->constraint;
            if (c.head == name && c.exported) {
                // binding the head closes the constraint: the traversed
                // label itself must equal the bound value
                Constraint closed;
                closed.head = c.head;
                closed.exported = false;
                closed.body = c.body;
                auto pin = FilterExpr::cmp(FilterExpr::CmpOp::Eq, Term::variable(c.head), value);
                closed.filter = filter_is_true(c.filter) ? pin : FilterExpr::conj(c.filter, pin);
                return PathExpr::axis_constrained(e->axis, std::move(closed));
            }
            if (c.head == name) return e;  // closed head shadows
            Constraint out = c;
            for (ConstraintTriple& t : out.body) {
                if (t.s.is_variable() && t.s.lexical == name) t.s = value;
                if (t.o.is_variable() && t.o.lexical == name) t.o = value;
                t.p = substitute(t.p, name, value);
            }
            return PathExpr::axis_constrained(e->axis, std::move(out));
        }
        case Kind::AxisNested:
            return PathExpr::axis_nested(e->axis, substitute(e->nested, name, value));
        case Kind::Seq:
            return PathExpr::seq(substitute(e->left, name, value), substitute(e->right, name, value));
        case Kind::Alt:
            return PathExpr::alt(substitute(e->left, name, value), substitute(e->right, name, value));
        case Kind::Star:
            return PathExpr::star(substitute(e->left, name, value));
        case Kind::Plus:
            return PathExpr::plus(substitute(e->left, name, value));
        default:
            return e;
    }
}

bool is_variable_free(const PathExprPtr& e) {
    return regex_vars(e).empty() && exported_vars(e).empty();
}

namespace {

bool constraint_restricted(const Constraint& c) {
    if (c.exported) return c.body.empty() && filter_is_true(c.filter);
    if (c.body.size() != 1) return false;
    const ConstraintTriple& t = c.body[0];
    if (!t.s.is_variable() || t.s.lexical != c.head) return false;
    if (!is_cpsparql(t.p)) return false;
    std::set<std::string> allowed = {c.head};
    if (t.o.is_variable()) allowed.insert(t.o.lexical);
    if (c.filter && !filter_is_true(c.filter)) {
        for (const std::string& v : filter_vars(*c.filter))
            if (!allowed.count(v)) return false;
    }
    return true;
}

const char* kind_name(PathExpr::Kind k) {
    using Kind = PathExpr::Kind;
    switch (k) {
        case Kind::AxisStep: return "axis step";
        case Kind::AxisTest: return "labeled axis step";
        case Kind::AxisNested: return "nested step";
        case Kind::AxisConstrained: return "constrained step";
        case Kind::Atom: return "predicate atom";
        case Kind::NegAtom: return "negated atom";
        case Kind::VarAtom: return "predicate variable";
        case Kind::Epsilon: return "epsilon";
        case Kind::Seq: return "sequence";
        case Kind::Alt: return "alternative";
        case Kind::Star: return "star";
        case Kind::Plus: return "plus";
    }
    return "?";
}

bool variant_legal(PathExpr::Kind k, Dialect d) {
    using Kind = PathExpr::Kind;
    switch (k) {
        case Kind::Seq:
        case Kind::Alt:
        case Kind::Star:
        case Kind::Plus:
            return true;
        case Kind::Atom:
        case Kind::NegAtom:
        case Kind::VarAtom:
            return d == Dialect::Psparql;
        case Kind::Epsilon:
            return d == Dialect::Psparql || d == Dialect::CpsparqlFull;
        case Kind::AxisStep:
        case Kind::AxisTest:
            return d != Dialect::Psparql;
        case Kind::AxisNested:
            return d == Dialect::Nsparql || d == Dialect::CpsparqlFull;
        case Kind::AxisConstrained:
            return d == Dialect::Cpsparql || d == Dialect::CpsparqlFull;
    }
    return false;
}

// Returns the offending node, or null when legal.
const PathExpr* dialect_violation(const PathExprPtr& e, Dialect d) {
    if (!variant_legal(e->kind, d)) return e.get();
    switch (e->kind) {
        case PathExpr::Kind::Seq:
        case PathExpr::Kind::Alt: {
            if (const PathExpr* v = dialect_violation(e->left, d)) return v;
            return dialect_violation(e->right, d);
        }
        case PathExpr::Kind::Star:
        case PathExpr::Kind::Plus:
            return dialect_violation(e->left, d);
        case PathExpr::Kind::AxisNested:
            return dialect_violation(e->nested, d);
        case PathExpr::Kind::AxisConstrained: {
            if (d == Dialect::Cpsparql && !constraint_restricted(e->constraint)) return e.get();
            for (const ConstraintTriple& t : e->constraint.body)
                if (const PathExpr* v = dialect_violation(t.p, d)) return v;
            return nullptr;
        }
        default:
            return nullptr;
    }
}

}  // namespace

bool is_cpsparql(const PathExprPtr& e) { return dialect_violation(e, Dialect::Cpsparql) == nullptr; }

bool in_dialect(const PathExprPtr& e, Dialect d) { return dialect_violation(e, d) == nullptr; }

void check_dialect(const PathExprPtr& e, Dialect d) {
    if (const PathExpr* v = dialect_violation(e, d))
        throw DialectError(std::string(kind_name(v->kind)) + " '" + to_string(*v) +
                           "' is not allowed in dialect " + to_string(d));
}

}  // namespace pathrdf
