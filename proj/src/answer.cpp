#include "pathrdf/answer.hpp"

#include <cassert>

namespace pathrdf {

bool compatible(const Map& a, const Map& b) {
    const Map& small = a.size() <= b.size() ? a : b;
    const Map& large = a.size() <= b.size() ? b : a;
    for (const auto& [k, v] : small) {
        auto it = large.find(k);
        if (it != large.end() && it->second != v) return false;
    }
    return true;
}

Map merge(const Map& a, const Map& b) {
    assert(compatible(a, b));
    Map out = a;
    out.insert(b.begin(), b.end());
    return out;
}

AnswerSet join(const AnswerSet& a, const AnswerSet& b) {
    AnswerSet out;
    for (const Map& m1 : a)
        for (const Map& m2 : b)
            if (compatible(m1, m2)) out.insert(merge(m1, m2));
    return out;
}

AnswerSet difference(const AnswerSet& a, const AnswerSet& b) {
    AnswerSet out;
    for (const Map& m1 : a) {
        bool clashes_all = true;
        for (const Map& m2 : b)
            if (compatible(m1, m2)) {
                clashes_all = false;
                break;
            }
        if (clashes_all) out.insert(m1);
    }
    return out;
}

Map restrict_complete(const Map& m, const std::vector<std::string>& vars) {
    Map out;
    for (const std::string& v : vars) {
        auto it = m.find(v);
        out[v] = it != m.end() ? it->second : std::nullopt;
    }
    return out;
}

std::string to_string(const Map& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : m) {
        if (!first) out += ", ";
        first = false;
        out += "?" + k + "=" + (v ? to_string(*v) : std::string("null"));
    }
    return out + "}";
}

}  // namespace pathrdf
