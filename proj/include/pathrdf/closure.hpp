#pragma once

#include <optional>

#include "pathrdf/homomorphism.hpp"

namespace pathrdf {

/// 1'000'000 unless overridden by the PATHRDF_TRIPLE_CAP environment
/// variable, read once per process.
std::size_t default_triple_cap();

struct ClosureConfig {
    bool reflexive = false;   // apply [RDFS 8a] / [RDFS 12a]
    bool extended = false;    // ter Horst rule set instead of the six ρdf rules
    bool axiomatic = false;   // inject axiomatic triples (requires context)
    std::optional<BasicGraphPattern> context;  // bounds the rdf:_i index k
    std::size_t cap = default_triple_cap();  // derived-triple limit
};

/// Least fixpoint of the selected rule set over g. Semi-naive: each round
/// only matches rules against triples derived in the previous round.
Graph closure(const Graph& g, const ClosureConfig& cfg);

/// Ĝ\\H: closure without the reflexivity rules, axiomatic triples (when
/// enabled) bounded by the rdf:_i indexes of g and h. Warns on stderr when
/// g is not genuine, since completeness is then not guaranteed.
Graph non_reflexive_closure(const Graph& g, const BasicGraphPattern& h, bool extended = false,
                            bool axiomatic = false);

/// The axiomatic triples injected when ClosureConfig::axiomatic is set,
/// with container-membership properties rdf:_1 … rdf:_k.
std::vector<Triple> axiomatic_triples(std::size_t k);

/// True iff no ρdf term occurs in subject or object position.
bool is_genuine(const Graph& g);

/// Number of triples added by the last closure call equals
/// closure(g).size() - g.size(); no separate counter is kept.

}  // namespace pathrdf
