#include "pathrdf/ntriples.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace pathrdf {

namespace {

const std::map<std::string, std::string>& canonical_iris() {
    static const std::map<std::string, std::string> m = {
        {"rdf:type", "type"},
        {"type", "type"},
        {"http://www.w3.org/1999/02/22-rdf-syntax-ns#type", "type"},
        {"rdfs:subClassOf", "sc"},
        {"subClassOf", "sc"},
        {"sc", "sc"},
        {"http://www.w3.org/2000/01/rdf-schema#subClassOf", "sc"},
        {"rdfs:subPropertyOf", "sp"},
        {"subPropertyOf", "sp"},
        {"sp", "sp"},
        {"http://www.w3.org/2000/01/rdf-schema#subPropertyOf", "sp"},
        {"rdfs:domain", "dom"},
        {"domain", "dom"},
        {"dom", "dom"},
        {"http://www.w3.org/2000/01/rdf-schema#domain", "dom"},
        {"rdfs:range", "range"},
        {"range", "range"},
        {"http://www.w3.org/2000/01/rdf-schema#range", "range"},
    };
    return m;
}

struct LineTokenizer {
    const std::string& line;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }

    // Returns empty optional at end of line.
    std::optional<std::string> next() {
        skip_ws();
        if (pos >= line.size()) return std::nullopt;
        std::size_t start = pos;
        if (line[pos] == '"') {
            ++pos;
            while (pos < line.size() && line[pos] != '"') {
                if (line[pos] == '\\' && pos + 1 < line.size()) ++pos;
                ++pos;
            }
            if (pos >= line.size()) throw ParseError("unterminated literal");
            ++pos;
            // datatype / language suffix, kept as part of the token
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        } else if (line[pos] == '<') {
            while (pos < line.size() && line[pos] != '>') ++pos;
            if (pos >= line.size()) throw ParseError("unterminated IRI");
            ++pos;
        } else {
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        }
        return line.substr(start, pos - start);
    }
};

std::string unescape(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) {
            ++i;
            switch (s[i]) {
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                default: out += s[i];
            }
        } else {
            out += s[i];
        }
    }
    return out;
}

}  // namespace

std::string canonical_iri(const std::string& iri) {
    auto it = canonical_iris().find(iri);
    if (it != canonical_iris().end()) return it->second;
    return iri;
}

Term parse_term_token(const std::string& tok) {
    if (tok.empty()) throw ParseError("empty term");
    if (tok[0] == '"') {
        std::size_t close = tok.rfind('"');
        if (close == 0) throw ParseError("unterminated literal: " + tok);
        // any ^^type or @lang suffix is collapsed into the plain literal kind
        return Term::literal(unescape(tok.substr(1, close - 1)));
    }
    if (tok[0] == '<') {
        if (tok.back() != '>') throw ParseError("unterminated IRI: " + tok);
        return Term::iri(canonical_iri(tok.substr(1, tok.size() - 2)));
    }
    if (tok[0] == '?' || tok[0] == '$') {
        if (tok.size() == 1) throw ParseError("empty variable name");
        return Term::variable(tok.substr(1));
    }
    if (tok.rfind("_:", 0) == 0) {
        // blank nodes become constants in a reserved namespace
        return Term::iri(tok);
    }
    return Term::iri(canonical_iri(tok));
}

Graph parse_ntriples(const std::string& text) {
    std::vector<Triple> triples;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::map<std::string, std::string> prefixes = {
        {"dm:", ""}, {"rn:", ""}, {"rdf:", ""}, {"rdfs:", ""}, {"ex:", ""},
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto fail = [&](const std::string& msg) -> ParseError {
            return ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        try {
            LineTokenizer tz{line};
            auto first = tz.next();
            if (!first || (*first)[0] == '#') continue;
            if (*first == "@prefix") {
                auto name = tz.next();
                auto iri = tz.next();
                if (!name || !iri) throw ParseError("malformed @prefix");
                prefixes[*name] = *iri;
                continue;
            }
            auto pred = tz.next();
            auto obj = tz.next();
            auto dot = tz.next();
            if (!pred || !obj) throw ParseError("expected 'subj pred obj .'");
            if (dot) {
                if (*dot != ".") throw ParseError("trailing content after object: " + *dot);
            } else {
                // accept the dot glued to the object token
                if (obj->size() > 1 && obj->back() == '.' && (*obj)[0] != '"') {
                    obj = obj->substr(0, obj->size() - 1);
                } else {
                    throw ParseError("missing terminating '.'");
                }
            }
            if (auto extra = tz.next()) throw ParseError("trailing content: " + *extra);

            Term s = parse_term_token(*first);
            Term p = parse_term_token(*pred);
            Term o = parse_term_token(*obj);
            if (s.is_literal()) throw ParseError("literal in subject position");
            if (p.is_literal()) throw ParseError("literal in predicate position");
            if (s.is_variable() || p.is_variable() || o.is_variable())
                throw ParseError("variable in data triple");
            triples.push_back({s, p, o});
        } catch (const ParseError& e) {
            std::string what = e.what();
            if (what.rfind("line ", 0) == 0) throw;
            throw fail(what);
        }
    }
    return Graph::from_triples(std::move(triples));
}

std::string serialize_ntriples(const Graph& g) {
    std::string out;
    for (const Triple& t : g.triples()) {
        out += to_string(t);
        out += '\n';
    }
    return out;
}

}  // namespace pathrdf
