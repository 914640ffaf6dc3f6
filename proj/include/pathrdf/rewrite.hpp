#pragma once

#include "pathrdf/pattern.hpp"

namespace pathrdf {

enum class RewriteMode { PsparqlTau, NsparqlPhi, CpsparqlTau };

std::optional<RewriteMode> rewrite_mode_from(const std::string& name);
std::string to_string(RewriteMode m);

/// Allocates fresh variable names that cannot collide with a given set of
/// user variables.
class FreshVars {
public:
    explicit FreshVars(std::set<std::string> taken) : taken_(std::move(taken)) {}
    std::string next(const std::string& stem);

private:
    std::set<std::string> taken_;
    int counter_ = 0;
};

/// SPARQL → PSPARQL triple expansion. Variable predicates pass through.
GraphPatternPtr tau_ps(const TriplePattern& t, FreshVars& fresh);

/// SPARQL → nSPARQL triple expansion; rejects variable predicates.
TriplePattern phi(const TriplePattern& t);

/// SPARQL → cpSPARQL triple expansion; a variable predicate becomes an
/// open constrained step binding the variable to the traversed predicate.
TriplePattern tau_cp(const TriplePattern& t, FreshVars& fresh);

/// nSPARQL → cpSPARQL structural translation; output satisfies
/// is_cpsparql.
PathExprPtr trans(const PathExprPtr& e);

/// Applies the mode's per-triple rewriting under every AND/UNION/OPT/
/// FILTER node; SELECT tuple and filters are unchanged.
Query rewrite_query(const Query& q, RewriteMode mode);

}  // namespace pathrdf
