#include "pathrdf/nfa.hpp"

#include <map>

namespace pathrdf {

namespace {

struct Builder {
    Nfa nfa;
    std::map<std::string, int> letter_ids;

    int new_state() {
        nfa.eps.emplace_back();
        nfa.labeled.emplace_back();
        return static_cast<int>(nfa.eps.size()) - 1;
    }

    int letter(const PathExprPtr& e) {
        std::string key = to_string(*e);
        auto it = letter_ids.find(key);
        if (it != letter_ids.end()) return it->second;
        int id = static_cast<int>(nfa.letters.size());
        nfa.letters.push_back(e);
        letter_ids[key] = id;
        return id;
    }

    // returns (start, final) fragment
    std::pair<int, int> build(const PathExprPtr& e) {
        using Kind = PathExpr::Kind;
        switch (e->kind) {
            case Kind::Epsilon: {
                int s = new_state(), f = new_state();
                nfa.eps[s].push_back(f);
                return {s, f};
            }
            case Kind::Seq: {
                auto [ls, lf] = build(e->left);
                auto [rs, rf] = build(e->right);
                nfa.eps[lf].push_back(rs);
                return {ls, rf};
            }
            case Kind::Alt: {
                auto [ls, lf] = build(e->left);
                auto [rs, rf] = build(e->right);
                int s = new_state(), f = new_state();
                nfa.eps[s].push_back(ls);
                nfa.eps[s].push_back(rs);
                nfa.eps[lf].push_back(f);
                nfa.eps[rf].push_back(f);
                return {s, f};
            }
            case Kind::Star: {
                auto [is, if_] = build(e->left);
                int s = new_state(), f = new_state();
                nfa.eps[s].push_back(is);
                nfa.eps[s].push_back(f);
                nfa.eps[if_].push_back(is);
                nfa.eps[if_].push_back(f);
                return {s, f};
            }
            case Kind::Plus:
                return build(PathExpr::seq(e->left, PathExpr::star(e->left)));
            default: {
                int s = new_state(), f = new_state();
                nfa.labeled[s].push_back({letter(e), f});
                return {s, f};
            }
        }
    }
};

}  // namespace

Nfa build_nfa(const PathExprPtr& e) {
    Builder b;
    auto [s, f] = b.build(e);
    b.nfa.start = s;
    b.nfa.final = f;
    return std::move(b.nfa);
}

std::set<int> Nfa::closure(const std::set<int>& states) const {
    std::set<int> out = states;
    std::vector<int> stack(states.begin(), states.end());
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int r : eps[q])
            if (out.insert(r).second) stack.push_back(r);
    }
    return out;
}

bool Nfa::accepts(const std::vector<int>& word) const {
    std::set<int> cur = closure({start});
    for (int a : word) {
        std::set<int> next;
        for (int q : cur)
            for (auto [ltr, to] : labeled[q])
                if (ltr == a) next.insert(to);
        cur = closure(next);
        if (cur.empty()) return false;
    }
    return cur.count(final) > 0;
}

}  // namespace pathrdf
