#include "pathrdf/closure.hpp"

#include <cstdlib>
#include <iostream>

namespace pathrdf {

std::size_t default_triple_cap() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("PATHRDF_TRIPLE_CAP")) {
            try {
                return static_cast<std::size_t>(std::stoull(env));
            } catch (...) {
            }
        }
        return static_cast<std::size_t>(1'000'000);
    }();
    return cap;
}

namespace {

std::size_t max_container_index(const Graph& g, const BasicGraphPattern* h) {
    auto index_of = [](const Term& t) -> std::size_t {
        if (!t.is_iri()) return 0;
        if (t.lexical.rfind("rdf:_", 0) != 0) return 0;
        try {
            return std::stoul(t.lexical.substr(5));
        } catch (...) {
            return 0;
        }
    };
    std::size_t k = 0;
    for (const Triple& t : g.triples())
        k = std::max({k, index_of(t.s), index_of(t.p), index_of(t.o)});
    if (h)
        for (const Triple& t : *h)
            k = std::max({k, index_of(t.s), index_of(t.p), index_of(t.o)});
    return k;
}

struct Saturator {
    bool reflexive, extended;
    std::size_t cap;
    std::set<Triple> all;
    std::map<Term, std::vector<Triple>> by_pred;

    void index(const Triple& t) { by_pred[t.p].push_back(t); }

    const std::vector<Triple>& with_pred(const Term& p) {
        static const std::vector<Triple> empty;
        auto it = by_pred.find(p);
        return it == by_pred.end() ? empty : it->second;
    }

    // Conclusions derivable from t joined with the current store.
    void conclusions(const Triple& t, std::vector<Triple>& out) {
        const Term& sp = rdfs::sp();
        const Term& sc = rdfs::sc();
        const Term& type = rdfs::type();
        const Term& dom = rdfs::dom();
        const Term& range = rdfs::range();

        if (t.p == sp) {
            for (const Triple& u : with_pred(sp)) {  // [RDFS 8b]
                if (u.s == t.o) out.push_back({t.s, sp, u.o});
                if (u.o == t.s) out.push_back({u.s, sp, t.o});
            }
            for (const Triple& u : with_pred(t.s)) out.push_back({u.s, t.o, u.o});  // [RDFS 9]
        }
        if (t.p == sc) {
            for (const Triple& u : with_pred(sc)) {  // [RDFS 12b]
                if (u.s == t.o) out.push_back({t.s, sc, u.o});
                if (u.o == t.s) out.push_back({u.s, sc, t.o});
            }
            for (const Triple& u : with_pred(type))  // [RDFS 11]
                if (u.o == t.s) out.push_back({u.s, type, t.o});
        }
        if (t.p == dom)
            for (const Triple& u : with_pred(t.s)) out.push_back({u.s, type, t.o});  // [RDFS 6]
        if (t.p == range)
            for (const Triple& u : with_pred(t.s)) out.push_back({u.o, type, t.o});  // [RDFS 7]

        // t as the second premise of the two-premise rules
        for (const Triple& u : with_pred(sp)) {
            if (u.s == t.p) out.push_back({t.s, u.o, t.o});  // [RDFS 9]
        }
        for (const Triple& u : with_pred(dom))
            if (u.s == t.p) out.push_back({t.s, type, u.o});  // [RDFS 6]
        for (const Triple& u : with_pred(range))
            if (u.s == t.p) out.push_back({t.o, type, u.o});  // [RDFS 7]
        if (t.p == type) {
            for (const Triple& u : with_pred(sc))  // [RDFS 11]
                if (u.s == t.o) out.push_back({t.s, type, u.o});
        }

        if (extended) {
            out.push_back({t.p, type, rdfs::prop()});  // [RDF2]
            if (t.p == type) {
                if (t.o == rdfs::prop() && reflexive) out.push_back({t.s, sp, t.s});  // [RDFS 8a]
                if (t.o == rdfs::cls()) {
                    out.push_back({t.s, sc, rdfs::res()});                 // [RDFS 10]
                    if (reflexive) out.push_back({t.s, sc, t.s});          // [RDFS 12a]
                }
                // [RDFS 13] read as a subproperty statement, cf. the
                // membership clause of the model definition
                if (t.o == rdfs::cont_mp()) out.push_back({t.s, sp, rdfs::member()});
                if (t.o == rdfs::datatype()) out.push_back({t.s, sc, rdfs::literal()});  // [RDFS 14]
            }
        }
    }

    Graph run(const Graph& g, const std::vector<Triple>& axioms) {
        std::vector<Triple> delta;
        auto add = [&](const Triple& t) {
            if (t.s.is_literal()) return;  // a literal subject is not a valid triple
            if (all.insert(t).second) {
                index(t);
                delta.push_back(t);
                if (all.size() > cap)
                    throw ResourceLimitError("closure exceeded the derived-triple cap of " +
                                             std::to_string(cap));
            }
        };
        for (const Triple& t : g.triples()) add(t);
        for (const Triple& t : axioms) add(t);
        std::vector<Triple> out;
        while (!delta.empty()) {
            std::vector<Triple> round = std::move(delta);
            delta.clear();
            for (const Triple& t : round) {
                out.clear();
                conclusions(t, out);
                for (const Triple& c : out) add(c);
            }
        }
        return Graph::from_triples({all.begin(), all.end()});
    }
};

}  // namespace

std::vector<Triple> axiomatic_triples(std::size_t k) {
    using namespace rdfs;
    const Term p = prop(), c = cls(), r = res(), ty = type();
    std::vector<Triple> out = {
        {ty, ty, p},        {sp(), ty, p},      {sc(), ty, p},     {dom(), ty, p},
        {range(), ty, p},   {member(), ty, p},  {ty, dom(), r},    {ty, range(), c},
        {dom(), dom(), p},  {dom(), range(), c}, {range(), dom(), p}, {range(), range(), c},
        {sp(), dom(), p},   {sp(), range(), p}, {sc(), dom(), c},  {sc(), range(), c},
        {member(), dom(), r}, {member(), range(), r},
    };
    for (std::size_t i = 1; i <= k; ++i) {
        Term ci = Term::iri("rdf:_" + std::to_string(i));
        out.push_back({ci, ty, cont_mp()});
        out.push_back({ci, ty, p});
        out.push_back({ci, dom(), r});
        out.push_back({ci, range(), r});
    }
    return out;
}

Graph closure(const Graph& g, const ClosureConfig& cfg) {
    if (cfg.axiomatic && !cfg.context)
        throw std::invalid_argument("axiomatic closure requires a context pattern");
    Saturator s{cfg.reflexive, cfg.extended, cfg.cap, {}, {}};
    std::vector<Triple> axioms;
    if (cfg.axiomatic)
        axioms = axiomatic_triples(max_container_index(g, &*cfg.context));
    return s.run(g, axioms);
}

Graph non_reflexive_closure(const Graph& g, const BasicGraphPattern& h, bool extended,
                            bool axiomatic) {
    if (!is_genuine(g))
        std::cerr << "warning: graph is not genuine; closure-based answers may be incomplete\n";
    ClosureConfig cfg;
    cfg.reflexive = false;
    cfg.extended = extended;
    cfg.axiomatic = axiomatic;
    cfg.context = h;
    return closure(g, cfg);
}

bool is_genuine(const Graph& g) {
    for (const Triple& t : g.triples())
        if (rdfs::is_rho_df(t.s) || rdfs::is_rho_df(t.o)) return false;
    return true;
}

}  // namespace pathrdf
