#include "pathrdf/term.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace pathrdf {

namespace {

bool is_token_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '-' ||
           c == '#' || c == '.';
}

bool needs_angle_brackets(const std::string& lex) {
    if (lex.empty()) return true;
    for (char c : lex)
        if (!is_token_char(c)) return true;
    return false;
}

}  // namespace

std::string to_string(const Term& t) {
    switch (t.kind) {
        case TermKind::Iri:
            if (needs_angle_brackets(t.lexical)) return "<" + t.lexical + ">";
            return t.lexical;
        case TermKind::Literal:
            return "\"" + t.lexical + "\"";
        case TermKind::Variable:
            return "?" + t.lexical;
    }
    return {};
}

std::optional<double> numeric_value(const Term& t) {
    if (t.kind == TermKind::Variable) return std::nullopt;
    const std::string& s = t.lexical;
    if (s.empty()) return std::nullopt;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) return std::nullopt;
    return v;
}

std::string to_string(const Triple& t) {
    return to_string(t.s) + " " + to_string(t.p) + " " + to_string(t.o) + " .";
}

namespace rdfs {

#define PATHRDF_VOCAB(fn, lex)              \
    const Term& fn() {                      \
        static const Term t = Term::iri(lex); \
        return t;                           \
    }

PATHRDF_VOCAB(sc, "sc")
PATHRDF_VOCAB(sp, "sp")
PATHRDF_VOCAB(type, "type")
PATHRDF_VOCAB(dom, "dom")
PATHRDF_VOCAB(range, "range")
PATHRDF_VOCAB(prop, "prop")
PATHRDF_VOCAB(cls, "class")
PATHRDF_VOCAB(res, "res")
PATHRDF_VOCAB(literal, "literal")
PATHRDF_VOCAB(member, "member")
PATHRDF_VOCAB(cont_mp, "contMP")
PATHRDF_VOCAB(datatype, "datatype")
PATHRDF_VOCAB(xml_lit, "xmlLit")

#undef PATHRDF_VOCAB

bool is_rho_df(const Term& t) {
    return t == sc() || t == sp() || t == type() || t == dom() || t == range();
}

}  // namespace rdfs

}  // namespace pathrdf
