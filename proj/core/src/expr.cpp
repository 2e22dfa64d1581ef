#include "xppkit/expr.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "util.hpp"

namespace xpp {

namespace detail {

struct ExprNode {
    enum Kind { Number, Ident, Unary, Binary, Call } kind;
    double value = 0;
    std::string name;   // identifier, operator spelling, or function name
    std::shared_ptr<const ExprNode> lhs, rhs;
};

} // namespace detail

namespace {

using detail::ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_number(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Number;
    n->value = v;
    return n;
}
NodePtr make_ident(std::string name) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Ident;
    n->name = std::move(name);
    return n;
}
NodePtr make_unary(NodePtr operand) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Unary;
    n->name = "-";
    n->lhs = std::move(operand);
    return n;
}
NodePtr make_binary(std::string op, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Binary;
    n->name = std::move(op);
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}
NodePtr make_call(std::string fn, NodePtr a, NodePtr b = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Call;
    n->name = std::move(fn);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

int function_arity(std::string_view name) {
    if (name == "sin" || name == "cos" || name == "tan" || name == "tanh" || name == "exp"
        || name == "log" || name == "sqrt" || name == "abs" || name == "heav")
        return 1;
    if (name == "min" || name == "max") return 2;
    return 0;
}

// Precedence: ^ (right-assoc) > unary - > * / > + -
struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    NodePtr parse() {
        auto e = sum();
        if (peek() != '\0') fail("unexpected trailing input");
        return e;
    }

    NodePtr sum() {
        auto lhs = term();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos;
            lhs = make_binary(std::string(1, c), std::move(lhs), term());
        }
    }

    NodePtr term() {
        auto lhs = factor();
        while (true) {
            char c = peek();
            if (c != '*' && c != '/') return lhs;
            ++pos;
            lhs = make_binary(std::string(1, c), std::move(lhs), factor());
        }
    }

    NodePtr factor() {
        if (consume('-')) return make_unary(factor());
        return power();
    }

    NodePtr power() {
        auto base = atom();
        if (consume('^')) return make_binary("^", std::move(base), factor());
        return base;
    }

    NodePtr atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            auto e = sum();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size()
               && (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '.'))
            ++pos;
        if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
            std::size_t save = pos++;
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
            if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
                    ++pos;
            } else {
                pos = save;
            }
        }
        auto v = detail::parse_number(src.substr(start, pos - start));
        if (!v) fail("bad numeric literal");
        return make_number(*v);
    }

    NodePtr name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size()
               && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        std::string id(src.substr(start, pos - start));
        if (peek() != '(') return make_ident(std::move(id));

        int arity = function_arity(id);
        if (arity == 0)
            throw Error(ErrorKind::UnknownFunction, "'" + id + "'");
        ++pos; // '('
        auto a = sum();
        NodePtr b;
        int found = 1;
        while (consume(',')) {
            if (found == 1)
                b = sum();
            else
                sum(); // consume for a precise arity diagnostic
            ++found;
        }
        if (!consume(')')) fail("expected ')'");
        if (found != arity)
            throw Error(ErrorKind::ArityError, "'" + id + "' takes " + std::to_string(arity)
                                                   + " argument(s), got "
                                                   + std::to_string(found));
        return make_call(std::move(id), std::move(a), std::move(b));
    }
};

double lookup(const Env& env, const std::string& name, Warnings* warnings) {
    if (auto it = env.find(name); it != env.end()) return it->second;
    for (const auto& [k, v] : env) {
        if (detail::iequals(k, name)) {
            warn(warnings, "identifier '" + name + "' matched case-insensitively to '" + k + "'");
            return v;
        }
    }
    throw Error(ErrorKind::UnboundIdentifier, "'" + name + "'");
}

double eval_node(const ExprNode& n, const Env& env, Warnings* warnings) {
    switch (n.kind) {
        case ExprNode::Number: return n.value;
        case ExprNode::Ident: return lookup(env, n.name, warnings);
        case ExprNode::Unary: return -eval_node(*n.lhs, env, warnings);
        case ExprNode::Binary: {
            double a = eval_node(*n.lhs, env, warnings);
            double b = eval_node(*n.rhs, env, warnings);
            switch (n.name[0]) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                case '^': return std::pow(a, b);
            }
            return 0;
        }
        case ExprNode::Call: {
            double a = eval_node(*n.lhs, env, warnings);
            if (n.name == "sin") return std::sin(a);
            if (n.name == "cos") return std::cos(a);
            if (n.name == "tan") return std::tan(a);
            if (n.name == "tanh") return std::tanh(a);
            if (n.name == "exp") return std::exp(a);
            if (n.name == "abs") return std::fabs(a);
            if (n.name == "heav") return a >= 0 ? 1.0 : 0.0; // heav(0) = 1
            if (n.name == "log") {
                if (a <= 0) {
                    warn(warnings, "log of non-positive value");
                    return std::numeric_limits<double>::quiet_NaN();
                }
                return std::log(a);
            }
            if (n.name == "sqrt") {
                if (a < 0) {
                    warn(warnings, "sqrt of negative value");
                    return std::numeric_limits<double>::quiet_NaN();
                }
                return std::sqrt(a);
            }
            double b = eval_node(*n.rhs, env, warnings);
            if (n.name == "min") return std::min(a, b);
            return std::max(a, b);
        }
    }
    return 0;
}

void print_node(const ExprNode& n, std::string& out) {
    switch (n.kind) {
        case ExprNode::Number: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", n.value);
            out += buf;
            return;
        }
        case ExprNode::Ident: out += n.name; return;
        case ExprNode::Unary:
            out += "(-";
            print_node(*n.lhs, out);
            out += ")";
            return;
        case ExprNode::Binary:
            out += "(";
            print_node(*n.lhs, out);
            out += n.name;
            print_node(*n.rhs, out);
            out += ")";
            return;
        case ExprNode::Call:
            out += n.name + "(";
            print_node(*n.lhs, out);
            if (n.rhs) {
                out += ",";
                print_node(*n.rhs, out);
            }
            out += ")";
            return;
    }
}

} // namespace

Expression::Expression(std::shared_ptr<const detail::ExprNode> root) : root_(std::move(root)) {}

Expression Expression::parse(std::string_view text) {
    Parser p{text};
    return Expression(p.parse());
}

double Expression::eval(const Env& env, Warnings* warnings) const {
    return eval_node(*root_, env, warnings);
}

std::string Expression::print() const {
    std::string out;
    print_node(*root_, out);
    return out;
}

} // namespace xpp
