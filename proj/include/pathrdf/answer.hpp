#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "pathrdf/term.hpp"

namespace pathrdf {

/// A partial variable binding σ. Keys are variable names (no leading "?").
/// nullopt is the null value produced by completion to the SELECT tuple;
/// matching itself never produces it.
using Map = std::map<std::string, std::optional<Term>>;

using AnswerSet = std::set<Map>;

bool compatible(const Map& a, const Map& b);
Map merge(const Map& a, const Map& b);

AnswerSet join(const AnswerSet& a, const AnswerSet& b);
AnswerSet difference(const AnswerSet& a, const AnswerSet& b);

/// σ|_vars^vars: restriction to vars, then completion with null.
Map restrict_complete(const Map& m, const std::vector<std::string>& vars);

std::string to_string(const Map& m);

}  // namespace pathrdf
