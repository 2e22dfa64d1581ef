#ifndef XPPKIT_EXPR_HPP
#define XPPKIT_EXPR_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "xppkit/errors.hpp"

namespace xpp {

/// Evaluation environment; lookups are case-sensitive with a
/// case-insensitive fallback that warns.
using Env = std::map<std::string, double, std::less<>>;

namespace detail {
struct ExprNode;
}

/// Immutable arithmetic expression over named values.
/// Operators: + - * / ^ (right-assoc), unary minus, parentheses.
/// Functions: sin cos tan tanh exp log sqrt abs heav (1-ary), min max (2-ary).
/// heav(0) = 1.
class Expression {
public:
    static Expression parse(std::string_view text);

    double eval(const Env& env, Warnings* warnings = nullptr) const;
    std::string print() const;

private:
    explicit Expression(std::shared_ptr<const detail::ExprNode> root);
    std::shared_ptr<const detail::ExprNode> root_;
};

} // namespace xpp

#endif
