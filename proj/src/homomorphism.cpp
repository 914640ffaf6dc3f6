#include "pathrdf/homomorphism.hpp"

#include <algorithm>

namespace pathrdf {

namespace {

// Candidate triples in g matching t under the partial binding held in σ.
// A variable already in σ acts as a constant.
bool position_matches(const Term& pat, const Term& val, Map& sigma) {
    if (!pat.is_variable()) return pat == val;
    auto it = sigma.find(pat.lexical);
    if (it != sigma.end()) return it->second && *it->second == val;
    sigma[pat.lexical] = val;
    return true;
}

std::size_t count_candidates(const Graph& g, const Triple& t, const Map& sigma) {
    std::size_t n = 0;
    for (const Triple& d : g.triples()) {
        Map scratch = sigma;
        if (position_matches(t.s, d.s, scratch) && position_matches(t.p, d.p, scratch) &&
            position_matches(t.o, d.o, scratch))
            ++n;
    }
    return n;
}

void search(const Graph& g, std::vector<Triple> remaining, Map sigma, AnswerSet& out) {
    if (remaining.empty()) {
        out.insert(std::move(sigma));
        return;
    }
    // pick the most constrained triple next
    std::size_t best = 0, best_count = SIZE_MAX;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
        std::size_t c = count_candidates(g, remaining[i], sigma);
        if (c < best_count) {
            best_count = c;
            best = i;
        }
    }
    Triple t = remaining[best];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    for (const Triple& d : g.triples()) {
        Map next = sigma;
        if (position_matches(t.s, d.s, next) && position_matches(t.p, d.p, next) &&
            position_matches(t.o, d.o, next))
            search(g, remaining, std::move(next), out);
    }
}

}  // namespace

AnswerSet find_homomorphisms(const Graph& g, const BasicGraphPattern& bgp) {
    AnswerSet out;
    search(g, bgp, Map{}, out);
    return out;
}

std::set<std::string> pattern_variables(const BasicGraphPattern& bgp) {
    std::set<std::string> vars;
    for (const Triple& t : bgp)
        for (const Term* pos : {&t.s, &t.p, &t.o})
            if (pos->is_variable()) vars.insert(pos->lexical);
    return vars;
}

}  // namespace pathrdf
