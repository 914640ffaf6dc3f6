#include "pathrdf/filter.hpp"

#include <cctype>
#include <regex>

namespace pathrdf {

FilterPtr FilterExpr::truth() {
    static const FilterPtr t = std::make_shared<FilterExpr>();
    return t;
}

FilterPtr FilterExpr::cmp(CmpOp op, Term l, Term r) {
    auto e = std::make_shared<FilterExpr>();
    e->kind = Kind::Cmp;
    e->op = op;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

FilterPtr FilterExpr::regex(std::string var, std::string pattern) {
    auto e = std::make_shared<FilterExpr>();
    e->kind = Kind::Regex;
    e->var = std::move(var);
    e->pattern = std::move(pattern);
    return e;
}

FilterPtr FilterExpr::bound(std::string var) {
    auto e = std::make_shared<FilterExpr>();
    e->kind = Kind::Bound;
    e->var = std::move(var);
    return e;
}

FilterPtr FilterExpr::conj(FilterPtr a, FilterPtr b) {
    auto e = std::make_shared<FilterExpr>();
    e->kind = Kind::And;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

FilterPtr FilterExpr::disj(FilterPtr a, FilterPtr b) {
    auto e = std::make_shared<FilterExpr>();
    e->kind = Kind::Or;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

FilterPtr FilterExpr::neg(FilterPtr a) {
    auto e = std::make_shared<FilterExpr>();
    e->kind = Kind::Not;
    e->a = std::move(a);
    return e;
}

namespace {

// Resolves a comparison operand: a variable is looked up in σ; an unbound
// variable or a null binding yields nullopt, which makes the comparison fail.
std::optional<Term> resolve(const Map& m, const Term& t) {
    if (!t.is_variable()) return t;
    auto it = m.find(t.lexical);
    if (it == m.end() || !it->second) return std::nullopt;
    return *it->second;
}

bool compare(FilterExpr::CmpOp op, const Term& a, const Term& b) {
    using Op = FilterExpr::CmpOp;
    auto na = numeric_value(a);
    auto nb = numeric_value(b);
    int c;
    if (na && nb) {
        c = *na < *nb ? -1 : (*na > *nb ? 1 : 0);
    } else {
        if (a.kind != b.kind) return op == Op::Ne;
        c = a.lexical < b.lexical ? -1 : (a.lexical > b.lexical ? 1 : 0);
    }
    switch (op) {
        case Op::Eq: return c == 0;
        case Op::Ne: return c != 0;
        case Op::Lt: return c < 0;
        case Op::Le: return c <= 0;
        case Op::Gt: return c > 0;
        case Op::Ge: return c >= 0;
    }
    return false;
}

}  // namespace

bool eval_filter(const Map& m, const FilterExpr& k) {
    using Kind = FilterExpr::Kind;
    switch (k.kind) {
        case Kind::True:
            return true;
        case Kind::Cmp: {
            auto a = resolve(m, k.lhs);
            auto b = resolve(m, k.rhs);
            if (!a || !b) return false;
            return compare(k.op, *a, *b);
        }
        case Kind::Regex: {
            auto it = m.find(k.var);
            if (it == m.end() || !it->second) return false;
            try {
                return std::regex_search(it->second->lexical, std::regex(k.pattern));
            } catch (const std::regex_error&) {
                return false;
            }
        }
        case Kind::Bound: {
            auto it = m.find(k.var);
            return it != m.end() && it->second.has_value();
        }
        case Kind::And:
            return eval_filter(m, *k.a) && eval_filter(m, *k.b);
        case Kind::Or:
            return eval_filter(m, *k.a) || eval_filter(m, *k.b);
        case Kind::Not:
            return !eval_filter(m, *k.a);
    }
    return false;
}

std::string to_string(const FilterExpr& k) {
    using Kind = FilterExpr::Kind;
    using Op = FilterExpr::CmpOp;
    switch (k.kind) {
        case Kind::True:
            return "TRUE";
        case Kind::Cmp: {
            const char* op = "=";
            switch (k.op) {
                case Op::Eq: op = "="; break;
                case Op::Ne: op = "!="; break;
                case Op::Lt: op = "<"; break;
                case Op::Le: op = "<="; break;
                case Op::Gt: op = ">"; break;
                case Op::Ge: op = ">="; break;
            }
            return to_string(k.lhs) + " " + op + " " + to_string(k.rhs);
        }
        case Kind::Regex:
            return "regex(?" + k.var + ", \"" + k.pattern + "\")";
        case Kind::Bound:
            return "bound(?" + k.var + ")";
        case Kind::And:
            return "(" + to_string(*k.a) + " && " + to_string(*k.b) + ")";
        case Kind::Or:
            return "(" + to_string(*k.a) + " || " + to_string(*k.b) + ")";
        case Kind::Not:
            return "!(" + to_string(*k.a) + ")";
    }
    return {};
}

std::set<std::string> filter_vars(const FilterExpr& k) {
    std::set<std::string> out;
    using Kind = FilterExpr::Kind;
    switch (k.kind) {
        case Kind::True:
            break;
        case Kind::Cmp:
            if (k.lhs.is_variable()) out.insert(k.lhs.lexical);
            if (k.rhs.is_variable()) out.insert(k.rhs.lexical);
            break;
        case Kind::Regex:
        case Kind::Bound:
            out.insert(k.var);
            break;
        case Kind::And:
        case Kind::Or: {
            out = filter_vars(*k.a);
            auto more = filter_vars(*k.b);
            out.insert(more.begin(), more.end());
            break;
        }
        case Kind::Not:
            out = filter_vars(*k.a);
            break;
    }
    return out;
}

namespace {

struct FilterParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(const std::string& tok) {
        skip_ws();
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("filter, position " + std::to_string(pos) + ": " + msg);
    }

    std::string term_token() {
        skip_ws();
        if (pos >= s.size()) fail("expected term");
        std::size_t start = pos;
        if (s[pos] == '"') {
            ++pos;
            while (pos < s.size() && s[pos] != '"') {
                if (s[pos] == '\\' && pos + 1 < s.size()) ++pos;
                ++pos;
            }
            if (pos >= s.size()) fail("unterminated literal");
            ++pos;
        } else if (s[pos] == '<') {
            while (pos < s.size() && s[pos] != '>') ++pos;
            if (pos >= s.size()) fail("unterminated IRI");
            ++pos;
        } else {
            while (pos < s.size()) {
                char c = s[pos];
                if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
                    c == '-' || c == '#' || c == '.' || c == '?' || c == '$') {
                    ++pos;
                } else {
                    break;
                }
            }
            if (pos == start) fail("expected term");
        }
        return s.substr(start, pos - start);
    }

    FilterPtr parse_or() {
        FilterPtr e = parse_and();
        while (eat("||")) e = FilterExpr::disj(e, parse_and());
        return e;
    }

    FilterPtr parse_and() {
        FilterPtr e = parse_unary();
        while (eat("&&")) e = FilterExpr::conj(e, parse_unary());
        return e;
    }

    FilterPtr parse_unary() {
        skip_ws();
        if (pos < s.size() && s[pos] == '!' && pos + 1 < s.size() && s[pos + 1] != '=') {
            ++pos;
            return FilterExpr::neg(parse_unary());
        }
        if (eat("(")) {
            FilterPtr e = parse_or();
            if (!eat(")")) fail("expected ')'");
            return e;
        }
        return parse_atom();
    }

    FilterPtr parse_atom() {
        skip_ws();
        if (eat("TRUE") || eat("true")) return FilterExpr::truth();
        if (eat("bound")) {
            if (!eat("(")) fail("expected '(' after bound");
            Term v = parse_term_value(term_token());
            if (!v.is_variable()) fail("bound() takes a variable");
            if (!eat(")")) fail("expected ')'");
            return FilterExpr::bound(v.lexical);
        }
        if (eat("regex")) {
            if (!eat("(")) fail("expected '(' after regex");
            Term v = parse_term_value(term_token());
            if (!v.is_variable()) fail("regex() takes a variable first");
            if (!eat(",")) fail("expected ','");
            std::string p = term_token();
            if (p.size() < 2 || p.front() != '"') fail("regex pattern must be quoted");
            if (!eat(")")) fail("expected ')'");
            return FilterExpr::regex(v.lexical, p.substr(1, p.size() - 2));
        }
        Term l = parse_term_value(term_token());
        FilterExpr::CmpOp op;
        if (eat("!=")) op = FilterExpr::CmpOp::Ne;
        else if (eat("<=")) op = FilterExpr::CmpOp::Le;
        else if (eat(">=")) op = FilterExpr::CmpOp::Ge;
        else if (eat("==") || eat("=")) op = FilterExpr::CmpOp::Eq;
        else if (eat("<")) op = FilterExpr::CmpOp::Lt;
        else if (eat(">")) op = FilterExpr::CmpOp::Gt;
        else fail("expected comparison operator");
        Term r = parse_term_value(term_token());
        return FilterExpr::cmp(op, std::move(l), std::move(r));
    }

    static Term parse_term_value(const std::string& tok) {
        if (tok.empty()) throw ParseError("empty filter term");
        if (tok[0] == '?' || tok[0] == '$') return Term::variable(tok.substr(1));
        if (tok[0] == '"') return Term::literal(tok.substr(1, tok.size() - 2));
        if (tok[0] == '<') return Term::iri(tok.substr(1, tok.size() - 2));
        return Term::iri(tok);
    }
};

}  // namespace

FilterPtr parse_filter(const std::string& text) {
    FilterParser p{text};
    FilterPtr e = p.parse_or();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("filter: trailing content at position " + std::to_string(p.pos));
    return e;
}

}  // namespace pathrdf
