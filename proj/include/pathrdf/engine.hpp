#pragma once

#include "pathrdf/closure.hpp"
#include "pathrdf/path_eval.hpp"
#include "pathrdf/pattern.hpp"

namespace pathrdf {

enum class EntailmentMode { Simple, RdfsClosure, RdfsPsparql, RdfsNsparql, RdfsCpsparql };

std::optional<EntailmentMode> entailment_mode_from(const std::string& name);
std::string to_string(EntailmentMode m);

/// Answers to one triple pattern. Plain predicates (Atom/VarAtom) match by
/// homomorphism; path predicates bind subject/object from the pair
/// evaluation plus exported constraint heads and regex variables.
AnswerSet eval_triple(PathEvaluator& ev, const TriplePattern& t);

AnswerSet eval_pattern(PathEvaluator& ev, const GraphPattern& p);

/// {σ|_B⃗^B⃗ : σ ∈ eval_pattern(q.where)}; rejects SELECT variables that do
/// not occur in the pattern.
AnswerSet answer_query(const Query& q, const Graph& g);

/// The eager strategy: evaluate q against the non-reflexive ρdf closure of
/// g given the triples of q's pattern.
AnswerSet answers_via_closure(const Query& q, const Graph& g);

/// Dispatch over the five entailment modes. The rewriting modes transform
/// q before plain evaluation; RdfsClosure saturates g instead.
AnswerSet answers_with_mode(const Query& q, const Graph& g, EntailmentMode mode);

}  // namespace pathrdf
