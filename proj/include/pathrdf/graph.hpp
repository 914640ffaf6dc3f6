#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "pathrdf/term.hpp"

namespace pathrdf {

enum class AxisBase { Self, Next, Edge, Node };

struct Axis {
    AxisBase base = AxisBase::Next;
    bool inverted = false;

    auto operator<=>(const Axis&) const = default;
};

std::string to_string(const Axis& a);

/// An immutable, ground RDF graph with the per-node adjacency index α(u).
/// Each triple ⟨s,p,o⟩ contributes:
///   ⟨next::p, o⟩ at s      ⟨next⁻¹::p, s⟩ at o
///   ⟨edge::o, p⟩ at s      ⟨edge⁻¹::o, s⟩ at p
///   ⟨node::s, o⟩ at p      ⟨node⁻¹::s, p⟩ at o
/// and ⟨self::u, u⟩ is implicit at every u ∈ voc(G).
class Graph {
public:
    struct Entry {
        Term label;
        Term target;
        auto operator<=>(const Entry&) const = default;
    };

    Graph() = default;
    static Graph from_triples(std::vector<Triple> triples);

    const std::vector<Triple>& triples() const { return triples_; }
    const std::set<Term>& vocabulary() const { return voc_; }
    std::size_t size() const { return triples_.size(); }
    bool contains(const Triple& t) const;
    bool contains_term(const Term& t) const { return voc_.count(t) > 0; }

    /// Adjacency entries ⟨axis::label, target⟩ at u. Unknown u yields empty.
    const std::vector<Entry>& entries(const Term& u, const Axis& axis) const;

    /// Targets reachable from u via one axis step (any label).
    std::vector<Term> adjacency(const Term& u, const Axis& axis) const;

    /// Targets reachable from u via axis::label.
    std::vector<Term> adjacency(const Term& u, const Axis& axis, const Term& label) const;

    /// Distinct predicate terms of the graph, sorted.
    std::vector<Term> predicates() const;

private:
    static int axis_slot(const Axis& axis);

    std::vector<Triple> triples_;
    std::set<Term> voc_;
    // slot order: next, next⁻¹, edge, edge⁻¹, node, node⁻¹
    std::map<Term, std::array<std::vector<Entry>, 6>> adj_;
};

}  // namespace pathrdf
