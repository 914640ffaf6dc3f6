#include "pathrdf/query_parser.hpp"

#include <cctype>

#include "pathrdf/ntriples.hpp"
#include "pathrdf/path_parser.hpp"

namespace pathrdf {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '-' ||
           c == '#' || c == '.';
}

struct QueryParser {
    const std::string& s;
    std::size_t pos = 0;
    bool axes_enabled;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("query, position " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    // Keyword match with a word boundary after it.
    bool eat_keyword(const std::string& kw) {
        skip_ws();
        if (s.compare(pos, kw.size(), kw) != 0) return false;
        std::size_t after = pos + kw.size();
        if (after < s.size() && is_name_char(s[after])) return false;
        pos = after;
        return true;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    std::string name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && is_name_char(s[pos])) ++pos;
        if (pos == start) fail("expected name");
        return s.substr(start, pos - start);
    }

    std::string var_name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (pos == start) fail("expected variable name");
        return s.substr(start, pos - start);
    }

    Term term() {
        skip_ws();
        if (pos >= s.size()) fail("expected term");
        if (s[pos] == '?' || s[pos] == '$') {
            ++pos;
            return Term::variable(var_name());
        }
        if (s[pos] == '"') {
            std::size_t start = ++pos;
            while (pos < s.size() && s[pos] != '"') ++pos;
            if (pos >= s.size()) fail("unterminated literal");
            return Term::literal(s.substr(start, pos++ - start));
        }
        if (s[pos] == '<') {
            std::size_t start = ++pos;
            while (pos < s.size() && s[pos] != '>') ++pos;
            if (pos >= s.size()) fail("unterminated IRI");
            return Term::iri(canonical_iri(s.substr(start, pos++ - start)));
        }
        return Term::iri(canonical_iri(name()));
    }

    GraphPatternPtr group() {
        expect('{');
        GraphPatternPtr acc;
        std::vector<TriplePattern> bgp;
        auto flush = [&] {
            if (!bgp.empty()) {
                auto b = GraphPattern::make_bgp(std::move(bgp));
                bgp.clear();
                acc = acc ? GraphPattern::conj(acc, b) : b;
            }
        };
        for (;;) {
            skip_ws();
            if (pos >= s.size()) fail("unterminated group");
            if (eat('}')) break;
            if (peek('{')) {
                flush();
                GraphPatternPtr l = group();
                while (eat_keyword("UNION")) l = GraphPattern::uni(l, group());
                acc = acc ? GraphPattern::conj(acc, l) : l;
                eat('.');
                continue;
            }
            if (eat_keyword("OPTIONAL")) {
                flush();
                if (!acc) acc = GraphPattern::make_bgp({});
                acc = GraphPattern::opt(acc, group());
                eat('.');
                continue;
            }
            if (eat_keyword("FILTER")) {
                expect('(');
                std::size_t start = pos;
                int depth = 1;
                while (pos < s.size() && depth > 0) {
                    if (s[pos] == '"') {
                        ++pos;
                        while (pos < s.size() && s[pos] != '"') ++pos;
                    } else if (s[pos] == '(') {
                        ++depth;
                    } else if (s[pos] == ')') {
                        --depth;
                    }
                    ++pos;
                }
                if (depth != 0) fail("unbalanced FILTER parentheses");
                FilterPtr k = parse_filter(s.substr(start, pos - 1 - start));
                flush();
                if (!acc) acc = GraphPattern::make_bgp({});
                acc = GraphPattern::filtered(acc, k);
                eat('.');
                continue;
            }
            TriplePattern t;
            t.s = term();
            if (t.s.is_literal()) fail("literal in subject position");
            skip_ws();
            t.pred = parse_path_prefix(s, pos, axes_enabled);
            t.o = term();
            bgp.push_back(std::move(t));
            if (!eat('.')) {
                expect('}');
                break;
            }
        }
        flush();
        return acc ? acc : GraphPattern::make_bgp({});
    }

    Query query() {
        if (!eat_keyword("SELECT")) fail("expected SELECT");
        Query q;
        for (;;) {
            skip_ws();
            if (pos < s.size() && (s[pos] == '?' || s[pos] == '$')) {
                ++pos;
                q.select.push_back(var_name());
                continue;
            }
            break;
        }
        if (q.select.empty()) fail("expected at least one result variable");
        if (!eat_keyword("WHERE")) fail("expected WHERE");
        q.where = group();
        skip_ws();
        if (pos != s.size()) fail("trailing content");
        return q;
    }
};

}  // namespace

Query parse_query(const std::string& text, bool axes_enabled) {
    QueryParser p{text, 0, axes_enabled};
    return p.query();
}

}  // namespace pathrdf
