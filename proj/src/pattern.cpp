#include "pathrdf/pattern.hpp"

namespace pathrdf {

std::string to_string(const TriplePattern& t) {
    return to_string(t.s) + " " + to_string(*t.pred) + " " + to_string(t.o);
}

GraphPatternPtr GraphPattern::make_bgp(std::vector<TriplePattern> triples) {
    auto p = std::make_shared<GraphPattern>();
    p->kind = Kind::Bgp;
    p->bgp = std::move(triples);
    return p;
}

GraphPatternPtr GraphPattern::conj(GraphPatternPtr l, GraphPatternPtr r) {
    auto p = std::make_shared<GraphPattern>();
    p->kind = Kind::And;
    p->left = std::move(l);
    p->right = std::move(r);
    return p;
}

GraphPatternPtr GraphPattern::uni(GraphPatternPtr l, GraphPatternPtr r) {
    auto p = std::make_shared<GraphPattern>();
    p->kind = Kind::Union;
    p->left = std::move(l);
    p->right = std::move(r);
    return p;
}

GraphPatternPtr GraphPattern::opt(GraphPatternPtr l, GraphPatternPtr r) {
    auto p = std::make_shared<GraphPattern>();
    p->kind = Kind::Opt;
    p->left = std::move(l);
    p->right = std::move(r);
    return p;
}

GraphPatternPtr GraphPattern::filtered(GraphPatternPtr p0, FilterPtr k) {
    auto p = std::make_shared<GraphPattern>();
    p->kind = Kind::Filter;
    p->left = std::move(p0);
    p->filter = std::move(k);
    return p;
}

std::set<std::string> pattern_vars(const GraphPattern& p) {
    std::set<std::string> out;
    auto merge_in = [&out](std::set<std::string> more) {
        out.insert(more.begin(), more.end());
    };
    switch (p.kind) {
        case GraphPattern::Kind::Bgp:
            for (const TriplePattern& t : p.bgp) {
                if (t.s.is_variable()) out.insert(t.s.lexical);
                if (t.o.is_variable()) out.insert(t.o.lexical);
                merge_in(regex_vars(t.pred));
                merge_in(exported_vars(t.pred));
            }
            break;
        case GraphPattern::Kind::Filter:
            out = pattern_vars(*p.left);
            break;
        default:
            out = pattern_vars(*p.left);
            merge_in(pattern_vars(*p.right));
            break;
    }
    return out;
}

namespace {

std::string inner(const GraphPattern& p) {
    switch (p.kind) {
        case GraphPattern::Kind::Bgp: {
            std::string out;
            for (const TriplePattern& t : p.bgp) out += to_string(t) + " . ";
            return out;
        }
        case GraphPattern::Kind::And:
            return inner(*p.left) + inner(*p.right);
        case GraphPattern::Kind::Union:
            return "{ " + inner(*p.left) + "} UNION { " + inner(*p.right) + "} ";
        case GraphPattern::Kind::Opt:
            return inner(*p.left) + "OPTIONAL { " + inner(*p.right) + "} ";
        case GraphPattern::Kind::Filter:
            return inner(*p.left) + "FILTER(" + to_string(*p.filter) + ") ";
    }
    return {};
}

}  // namespace

std::string to_string(const GraphPattern& p) { return "{ " + inner(p) + "}"; }

std::string to_string(const Query& q) {
    std::string out = "SELECT";
    for (const std::string& v : q.select) out += " ?" + v;
    return out + " WHERE " + to_string(*q.where);
}

}  // namespace pathrdf
