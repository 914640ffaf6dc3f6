#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathrdf {

enum class TermKind { Iri, Literal, Variable };

/// An RDF term: IRI, literal, or variable. Blank nodes are normalized to
/// IRIs in a reserved namespace at parse time, so they never appear here.
struct Term {
    TermKind kind = TermKind::Iri;
    std::string lexical;

    Term() = default;
    Term(TermKind k, std::string lex) : kind(k), lexical(std::move(lex)) {}

    static Term iri(std::string lex) { return Term(TermKind::Iri, std::move(lex)); }
    static Term literal(std::string lex) { return Term(TermKind::Literal, std::move(lex)); }
    static Term variable(std::string name) { return Term(TermKind::Variable, std::move(name)); }

    bool is_iri() const { return kind == TermKind::Iri; }
    bool is_literal() const { return kind == TermKind::Literal; }
    bool is_variable() const { return kind == TermKind::Variable; }

    auto operator<=>(const Term&) const = default;
    bool operator==(const Term&) const = default;
};

/// Serialized form used in output rows and N-Triples: IRIs as bare tokens
/// or <...> when they contain characters outside the token charset,
/// literals quoted, variables with a leading '?'.
std::string to_string(const Term& t);

/// Numeric value of a term, if its lexical form parses as an integer or
/// decimal. Literals and bare numeric IRI tokens both qualify.
std::optional<double> numeric_value(const Term& t);

struct Triple {
    Term s, p, o;

    auto operator<=>(const Triple&) const = default;
    bool operator==(const Triple&) const = default;
};

std::string to_string(const Triple& t);

/// ρdf vocabulary. Parsing canonicalizes rdf:/rdfs:-prefixed spellings
/// to these short IRIs so rule matching is spelling-independent.
namespace rdfs {
const Term& sc();
const Term& sp();
const Term& type();
const Term& dom();
const Term& range();
const Term& prop();
const Term& cls();
const Term& res();
const Term& literal();
const Term& member();
const Term& cont_mp();
const Term& datatype();
const Term& xml_lit();

bool is_rho_df(const Term& t);
}  // namespace rdfs

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DialectError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pathrdf
