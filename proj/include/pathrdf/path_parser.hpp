#pragma once

#include "pathrdf/path_expr.hpp"

namespace pathrdf {

/// Parses the path surface grammar and checks the result against the
/// dialect. Precedence: * and + bind tighter than /, which binds tighter
/// than |; parentheses override.
PathExprPtr parse_path(const std::string& text, Dialect dialect);

/// Parses without a dialect check (used by the query parser, which accepts
/// any dialect and validates per entailment mode).
PathExprPtr parse_path_any(const std::string& text);

/// Parses one path expression starting at pos, advancing pos past it.
/// Used by the query parser for triple-pattern predicates.
PathExprPtr parse_path_prefix(const std::string& text, std::size_t& pos, bool axes_enabled = true);

}  // namespace pathrdf
