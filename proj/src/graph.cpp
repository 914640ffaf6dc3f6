#include "pathrdf/graph.hpp"

#include <algorithm>
#include <array>

namespace pathrdf {

std::string to_string(const Axis& a) {
    const char* name = "self";
    switch (a.base) {
        case AxisBase::Self: name = "self"; break;
        case AxisBase::Next: name = "next"; break;
        case AxisBase::Edge: name = "edge"; break;
        case AxisBase::Node: name = "node"; break;
    }
    std::string s = name;
    if (a.inverted) s += "^-1";
    return s;
}

int Graph::axis_slot(const Axis& axis) {
    switch (axis.base) {
        case AxisBase::Next: return axis.inverted ? 1 : 0;
        case AxisBase::Edge: return axis.inverted ? 3 : 2;
        case AxisBase::Node: return axis.inverted ? 5 : 4;
        case AxisBase::Self: return -1;
    }
    return -1;
}

Graph Graph::from_triples(std::vector<Triple> triples) {
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

    Graph g;
    g.triples_ = std::move(triples);
    for (const Triple& t : g.triples_) {
        g.voc_.insert(t.s);
        g.voc_.insert(t.p);
        g.voc_.insert(t.o);
        g.adj_[t.s][0].push_back({t.p, t.o});  // next
        g.adj_[t.o][1].push_back({t.p, t.s});  // next^-1
        g.adj_[t.s][2].push_back({t.o, t.p});  // edge
        g.adj_[t.p][3].push_back({t.o, t.s});  // edge^-1
        g.adj_[t.p][4].push_back({t.s, t.o});  // node
        g.adj_[t.o][5].push_back({t.s, t.p});  // node^-1
    }
    for (auto& [u, slots] : g.adj_) {
        for (auto& entries : slots) {
            std::sort(entries.begin(), entries.end());
            entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
        }
    }
    return g;
}

bool Graph::contains(const Triple& t) const {
    return std::binary_search(triples_.begin(), triples_.end(), t);
}

const std::vector<Graph::Entry>& Graph::entries(const Term& u, const Axis& axis) const {
    static const std::vector<Entry> empty;
    int slot = axis_slot(axis);
    if (slot < 0) return empty;  // self handled by callers
    auto it = adj_.find(u);
    if (it == adj_.end()) return empty;
    return it->second[slot];
}

std::vector<Term> Graph::adjacency(const Term& u, const Axis& axis) const {
    std::vector<Term> out;
    if (axis.base == AxisBase::Self) {
        if (voc_.count(u)) out.push_back(u);
        return out;
    }
    for (const Entry& e : entries(u, axis)) out.push_back(e.target);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Term> Graph::adjacency(const Term& u, const Axis& axis, const Term& label) const {
    std::vector<Term> out;
    if (axis.base == AxisBase::Self) {
        if (voc_.count(u) && u == label) out.push_back(u);
        return out;
    }
    const auto& es = entries(u, axis);
    auto lo = std::lower_bound(es.begin(), es.end(), Entry{label, Term()},
                               [](const Entry& a, const Entry& b) { return a.label < b.label; });
    for (auto it = lo; it != es.end() && it->label == label; ++it) out.push_back(it->target);
    return out;
}

std::vector<Term> Graph::predicates() const {
    std::set<Term> ps;
    for (const Triple& t : triples_) ps.insert(t.p);
    return std::vector<Term>(ps.begin(), ps.end());
}

}  // namespace pathrdf
