#include "pathrdf/path_parser.hpp"

#include <cctype>

#include "pathrdf/ntriples.hpp"

namespace pathrdf {

namespace {

bool is_iri_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '-' ||
           c == '#' || c == '.';
}

struct PathParser {
    const std::string& s;
    std::size_t pos = 0;
    bool axes_enabled;  // PSPARQL reads axis names as plain atoms

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("path, position " + std::to_string(pos) + ": " + msg);
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    bool eat(const std::string& tok) {
        skip_ws();
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string var_word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (pos == start) fail("expected variable name");
        return s.substr(start, pos - start);
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && is_iri_char(s[pos])) ++pos;
        if (pos == start) fail("expected name");
        return s.substr(start, pos - start);
    }

    Term iri_term() {
        skip_ws();
        if (pos < s.size() && s[pos] == '<') {
            std::size_t start = ++pos;
            while (pos < s.size() && s[pos] != '>') ++pos;
            if (pos >= s.size()) fail("unterminated IRI");
            return Term::iri(canonical_iri(s.substr(start, pos++ - start)));
        }
        return Term::iri(canonical_iri(word()));
    }

    Term body_term() {
        skip_ws();
        if (pos >= s.size()) fail("expected term");
        if (s[pos] == '?' || s[pos] == '$') {
            ++pos;
            return Term::variable(var_word());
        }
        if (s[pos] == '"') {
            std::size_t start = ++pos;
            while (pos < s.size() && s[pos] != '"') ++pos;
            if (pos >= s.size()) fail("unterminated literal");
            return Term::literal(s.substr(start, pos++ - start));
        }
        return iri_term();
    }

    static std::optional<AxisBase> axis_of(const std::string& w) {
        if (w == "self") return AxisBase::Self;
        if (w == "next") return AxisBase::Next;
        if (w == "edge") return AxisBase::Edge;
        if (w == "node") return AxisBase::Node;
        return std::nullopt;
    }

    PathExprPtr parse_alt() {
        PathExprPtr e = parse_seq();
        while (eat('|')) e = PathExpr::alt(e, parse_seq());
        return e;
    }

    PathExprPtr parse_seq() {
        PathExprPtr e = parse_post();
        while (eat('/')) e = PathExpr::seq(e, parse_post());
        return e;
    }

    PathExprPtr parse_post() {
        PathExprPtr e = parse_prim();
        for (;;) {
            if (eat('*')) e = PathExpr::star(e);
            else if (eat('+')) e = PathExpr::plus(e);
            else return e;
        }
    }

    PathExprPtr parse_prim() {
        skip_ws();
        if (pos >= s.size()) fail("expected expression");
        if (eat('(')) {
            PathExprPtr e = parse_alt();
            expect(')');
            return e;
        }
        if (s[pos] == '!') {
            ++pos;
            return PathExpr::neg_atom(iri_term());
        }
        if (s[pos] == '?' || s[pos] == '$') {
            ++pos;
            return PathExpr::var_atom(Term::variable(var_word()));
        }
        bool pre_invert = false;
        if (s[pos] == '^') {
            pre_invert = true;
            ++pos;
            skip_ws();
        }
        if (s[pos] == '<') {
            Term t = iri_term();
            if (pre_invert) fail("'^' applies only to axes");
            return PathExpr::atom(std::move(t));
        }
        std::size_t start = pos;
        std::string w = word();
        if (w == "eps") {
            if (pre_invert) fail("'^' applies only to axes");
            return PathExpr::epsilon();
        }
        // axis keywords must be split off the word, whose charset also
        // covers "next::sp" as a whole
        std::optional<AxisBase> base;
        if (axes_enabled) {
            std::size_t cut = w.find_first_not_of("abcdefghijklmnopqrstuvwxyz");
            std::string head = cut == std::string::npos ? w : w.substr(0, cut);
            base = axis_of(head);
            if (base) pos = start + head.size();
        }
        if (!base) {
            if (pre_invert) fail("'^' applies only to axes");
            return PathExpr::atom(Term::iri(canonical_iri(w)));
        }
        Axis axis{*base, pre_invert};
        if (s.compare(pos, 3, "^-1") == 0) {
            pos += 3;
            axis.inverted = !axis.inverted;
        }
        // self^-1 has the same meaning as self
        if (axis.base == AxisBase::Self) axis.inverted = false;
        if (eat("::")) return axis_tail(axis);
        if (peek('[')) return axis_tail(axis);  // bracket directly after the axis: next[nre]
        return PathExpr::axis_step(axis);
    }

    PathExprPtr axis_tail(Axis axis) {
        skip_ws();
        std::optional<Constraint> constraint;
        PathExprPtr nre;
        std::optional<Term> test;
        if (eat(']')) {  // open constraint  axis::]?x:TRUE[
            constraint = parse_constraint(true);
            expect('[');
        } else if (eat('[')) {
            skip_ws();
            if (pos < s.size() && (s[pos] == '?' || s[pos] == '$')) {
                constraint = parse_constraint(false);
                expect(']');
            } else {
                nre = parse_alt();
                expect(']');
            }
        } else {
            test = iri_term();
        }
        // inversion may also be written after the whole step
        if (s.compare(pos, 3, "^-1") == 0) {
            pos += 3;
            if (axis.base != AxisBase::Self) axis.inverted = !axis.inverted;
        }
        if (constraint) return PathExpr::axis_constrained(axis, std::move(*constraint));
        if (nre) return PathExpr::axis_nested(axis, std::move(nre));
        return PathExpr::axis_test(axis, std::move(*test));
    }

    Constraint parse_constraint(bool exported) {
        Constraint c;
        c.exported = exported;
        skip_ws();
        if (pos >= s.size() || (s[pos] != '?' && s[pos] != '$')) fail("expected head variable");
        ++pos;
        c.head = var_word();
        expect(':');
        skip_ws();
        if (eat("TRUE") || eat("true")) {
            // empty body
        } else {
            expect('{');
            for (;;) {
                skip_ws();
                if (eat('}')) break;
                ConstraintTriple t;
                t.s = body_term();
                t.p = parse_alt();
                t.o = body_term();
                c.body.push_back(std::move(t));
                skip_ws();
                if (eat('.')) continue;
                expect('}');
                break;
            }
        }
        if (eat("FILTER")) {
            expect('(');
            std::size_t start = pos;
            int depth = 1;
            while (pos < s.size() && depth > 0) {
                if (s[pos] == '(') ++depth;
                else if (s[pos] == ')') --depth;
                ++pos;
            }
            if (depth != 0) fail("unbalanced FILTER parentheses");
            c.filter = parse_filter(s.substr(start, pos - 1 - start));
        } else {
            c.filter = FilterExpr::truth();
        }
        return c;
    }
};

}  // namespace

PathExprPtr parse_path_any(const std::string& text) {
    PathParser p{text, 0, true};
    PathExprPtr e = p.parse_alt();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing content");
    return e;
}

PathExprPtr parse_path_prefix(const std::string& text, std::size_t& pos, bool axes_enabled) {
    PathParser p{text, pos, axes_enabled};
    PathExprPtr e = p.parse_alt();
    pos = p.pos;
    return e;
}

PathExprPtr parse_path(const std::string& text, Dialect dialect) {
    PathParser p{text, 0, dialect != Dialect::Psparql};
    PathExprPtr e = p.parse_alt();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing content");
    check_dialect(e, dialect);
    return e;
}

}  // namespace pathrdf
