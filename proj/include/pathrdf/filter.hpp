#pragma once

#include <memory>
#include <string>

#include "pathrdf/answer.hpp"
#include "pathrdf/term.hpp"

namespace pathrdf {

/// Boolean filter condition K. Evaluation is total: unbound variables and
/// type mismatches make a comparison not-⊤ instead of raising.
struct FilterExpr {
    enum class Kind { True, Cmp, Regex, Bound, And, Or, Not };
    enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

    Kind kind = Kind::True;
    CmpOp op = CmpOp::Eq;
    Term lhs, rhs;            // Cmp operands (either may be a variable)
    std::string var;          // Regex / Bound subject variable name
    std::string pattern;      // Regex pattern
    std::shared_ptr<const FilterExpr> a, b;

    static std::shared_ptr<const FilterExpr> truth();
    static std::shared_ptr<const FilterExpr> cmp(CmpOp op, Term l, Term r);
    static std::shared_ptr<const FilterExpr> regex(std::string var, std::string pattern);
    static std::shared_ptr<const FilterExpr> bound(std::string var);
    static std::shared_ptr<const FilterExpr> conj(std::shared_ptr<const FilterExpr> a,
                                                  std::shared_ptr<const FilterExpr> b);
    static std::shared_ptr<const FilterExpr> disj(std::shared_ptr<const FilterExpr> a,
                                                  std::shared_ptr<const FilterExpr> b);
    static std::shared_ptr<const FilterExpr> neg(std::shared_ptr<const FilterExpr> a);
};

using FilterPtr = std::shared_ptr<const FilterExpr>;

bool eval_filter(const Map& m, const FilterExpr& k);

std::string to_string(const FilterExpr& k);

/// Parses the text between FILTER( and the matching ). Operators:
/// = == != < <= > >=, && || !, bound(?x), regex(?x, "pat"), parentheses,
/// and the literal TRUE.
FilterPtr parse_filter(const std::string& text);

/// Variables mentioned by k, in name form.
std::set<std::string> filter_vars(const FilterExpr& k);

}  // namespace pathrdf
