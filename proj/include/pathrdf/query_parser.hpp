#pragma once

#include "pathrdf/pattern.hpp"

namespace pathrdf {

/// Parses "SELECT ?v ... WHERE { ... }". Group contents are triple
/// patterns (predicates may be path expressions), nested groups,
/// "{ ... } UNION { ... }", "OPTIONAL { ... }" and "FILTER(...)", the
/// latter two applying to everything accumulated so far in the group.
/// With axes_enabled = false the axis keywords parse as plain atoms.
Query parse_query(const std::string& text, bool axes_enabled = true);

}  // namespace pathrdf
