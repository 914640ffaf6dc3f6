#pragma once

#include "pathrdf/path_expr.hpp"

namespace pathrdf {

/// A triple pattern. The predicate is always a path expression: a plain
/// SPARQL constant predicate is an Atom, a variable predicate a VarAtom.
struct TriplePattern {
    Term s;
    PathExprPtr pred;
    Term o;
};

std::string to_string(const TriplePattern& t);

struct GraphPattern;
using GraphPatternPtr = std::shared_ptr<const GraphPattern>;

struct GraphPattern {
    enum class Kind { Bgp, And, Union, Opt, Filter };

    Kind kind = Kind::Bgp;
    std::vector<TriplePattern> bgp;
    GraphPatternPtr left, right;  // And/Union/Opt children; Filter uses left
    FilterPtr filter;             // Filter condition K

    static GraphPatternPtr make_bgp(std::vector<TriplePattern> triples);
    static GraphPatternPtr conj(GraphPatternPtr l, GraphPatternPtr r);
    static GraphPatternPtr uni(GraphPatternPtr l, GraphPatternPtr r);
    static GraphPatternPtr opt(GraphPatternPtr l, GraphPatternPtr r);
    static GraphPatternPtr filtered(GraphPatternPtr p, FilterPtr k);
};

/// ℬ(P): the variables that may occur in answers — subject/object
/// variables, plain predicate variables, and exported constraint heads.
std::set<std::string> pattern_vars(const GraphPattern& p);

struct Query {
    std::vector<std::string> select;
    GraphPatternPtr where;
};

std::string to_string(const GraphPattern& p);
std::string to_string(const Query& q);

}  // namespace pathrdf
