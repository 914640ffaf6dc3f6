#pragma once

#include <memory>
#include <vector>

#include "pathrdf/filter.hpp"
#include "pathrdf/graph.hpp"

namespace pathrdf {

enum class Dialect { Psparql, Nsparql, Cpsparql, CpsparqlFull };

std::string to_string(Dialect d);

struct PathExpr;
using PathExprPtr = std::shared_ptr<const PathExpr>;

/// One triple of a constraint body. The predicate is itself a path
/// expression; subject and object are constants or variables (one of them
/// usually the constraint head).
struct ConstraintTriple {
    Term s;
    PathExprPtr p;
    Term o;
};

/// ψ — a constraint attached to an axis step. Open brackets ]?x:…[ export
/// the head variable into query answers; closed brackets [?x:…] do not.
struct Constraint {
    std::string head;  // variable name
    bool exported = false;
    std::vector<ConstraintTriple> body;
    FilterPtr filter;  // never null; TRUE when absent
};

/// Unified AST for PSPARQL regular expression patterns, nSPARQL nested
/// regular expressions, and CPSPARQL constrained regular expressions.
struct PathExpr {
    enum class Kind {
        AxisStep,         // next
        AxisTest,         // next::a
        AxisNested,       // next::[nre]
        AxisConstrained,  // next::[?x:ψ] or next::]?x:TRUE[
        Atom,             // a          (PSPARQL)
        NegAtom,          // !a         (PSPARQL)
        VarAtom,          // ?x         (PSPARQL)
        Epsilon,          // eps        (PSPARQL)
        Seq,              // l/r
        Alt,              // l|r
        Star,             // e*
        Plus,             // e+  (≡ e/e*)
    };

    Kind kind;
    Axis axis;             // Axis* variants
    Term term;             // AxisTest label, Atom/NegAtom IRI, VarAtom variable
    PathExprPtr nested;    // AxisNested body
    Constraint constraint; // AxisConstrained
    PathExprPtr left, right;  // Seq/Alt children; Star/Plus use left

    static PathExprPtr axis_step(Axis a);
    static PathExprPtr axis_test(Axis a, Term iri);
    static PathExprPtr axis_nested(Axis a, PathExprPtr nre);
    static PathExprPtr axis_constrained(Axis a, Constraint c);
    static PathExprPtr atom(Term iri);
    static PathExprPtr neg_atom(Term iri);
    static PathExprPtr var_atom(Term var);
    static PathExprPtr epsilon();
    static PathExprPtr seq(PathExprPtr l, PathExprPtr r);
    static PathExprPtr alt(PathExprPtr l, PathExprPtr r);
    static PathExprPtr star(PathExprPtr e);
    static PathExprPtr plus(PathExprPtr e);
};

std::string to_string(const PathExpr& e);
std::string to_string(const PathExprPtr& e);

/// Structural equality via the canonical serialized form.
bool expr_equal(const PathExprPtr& a, const PathExprPtr& b);

/// T(R): the atomic alphabet symbols of e. Seq/Alt/Star/Plus recurse; every
/// other variant is a single letter. Epsilon contributes nothing.
std::vector<PathExprPtr> terms_of(const PathExprPtr& e);

/// ℬ(R): head variables of exported (open-bracket) constraints.
std::set<std::string> exported_vars(const PathExprPtr& e);

/// PSPARQL regex variables (VarAtom leaves).
std::set<std::string> regex_vars(const PathExprPtr& e);

/// Substitutes a term for every VarAtom ?name and for open constraints
/// headed by ?name (which become closed equality tests on the label).
PathExprPtr substitute(const PathExprPtr& e, const std::string& name, const Term& value);

/// True iff e contains no variables (no VarAtom, no open constraint, and
/// constraint bodies use only their own head plus at most local variables).
bool is_variable_free(const PathExprPtr& e);

/// cpSPARQL restriction check: every constraint has an empty body with
/// filter TRUE and an exported head, or exactly one body triple
/// ⟨head, cpre, v⟩ with v a constant or a single non-head variable and a
/// filter over at most those two variables.
bool is_cpsparql(const PathExprPtr& e);

/// True iff every variant of e is legal in dialect d.
bool in_dialect(const PathExprPtr& e, Dialect d);

/// Raises DialectError naming the offending construct when e is not legal
/// in d.
void check_dialect(const PathExprPtr& e, Dialect d);

}  // namespace pathrdf
