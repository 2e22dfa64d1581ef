#include <doctest.h>

#include <cmath>
#include <random>

#include "xppkit/expr.hpp"

using namespace xpp;

static double ev(const std::string& text, const Env& env = {}) {
    return Expression::parse(text).eval(env);
}

TEST_CASE("expr: arithmetic and precedence") {
    CHECK(ev("2+3*4") == 14);
    CHECK(ev("(2+3)*4") == 20);
    CHECK(ev("2^3^2") == 512); // right-assoc
    CHECK(ev("-2^2") == -4);   // ^ binds tighter than unary minus
    CHECK(ev("10-4-3") == 3);  // left-assoc
    CHECK(ev("7/2") == 3.5);
    CHECK(ev("1.5e2+5e-1") == doctest::Approx(150.5));
}

TEST_CASE("expr: functions") {
    CHECK(ev("sin(0)") == 0);
    CHECK(ev("max(2,3)+min(2,3)") == 5);
    CHECK(ev("abs(-4)") == 4);
    CHECK(ev("heav(-1)") == 0);
    CHECK(ev("heav(2)") == 1);
    CHECK(ev("heav(0)") == 1); // XPPAUT convention
    CHECK(ev("0.5*(1+tanh((v-vm)/sm))", {{"v", -20}, {"vm", -20}, {"sm", 12}}) == 0.5);
    CHECK(ev("exp(log(5))") == doctest::Approx(5));
}

TEST_CASE("expr: parse errors") {
    CHECK_THROWS_AS(Expression::parse("2+"), Error);
    CHECK_THROWS_AS(Expression::parse("sin()"), Error);
    CHECK_THROWS_AS(Expression::parse("sin(1,2)"), Error);
    CHECK_THROWS_AS(Expression::parse("nosuchfn(1)"), Error);
    CHECK_THROWS_AS(Expression::parse("(1"), Error);
    try {
        Expression::parse("min(1)");
        FAIL("expected ArityError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ArityError);
    }
}

TEST_CASE("expr: evaluation errors and warnings") {
    CHECK_THROWS_AS(ev("x+1"), Error); // UnboundIdentifier
    Warnings w;
    Env env{{"Volt", 3}};
    CHECK(Expression::parse("volt*2").eval(env, &w) == 6); // case fallback warns
    CHECK(w.size() == 1);
    w.clear();
    CHECK(std::isnan(Expression::parse("log(-1)").eval({}, &w)));
    CHECK(!w.empty());
}

TEST_CASE("expr: print/parse round-trip preserves value") {
    Env env{{"x", 0.7}, {"y", -2.25}};
    for (const char* s : {"2+3*4", "-(x^2)+y/3", "sin(x)*cos(y)+heav(x-y)",
                          "max(x,y)^2-min(x,abs(y))"}) {
        auto e = Expression::parse(s);
        auto again = Expression::parse(e.print());
        CHECK(again.eval(env) == doctest::Approx(e.eval(env)).epsilon(1e-12));
    }
}

// Independent oracle: random expression trees are built alongside their own
// direct recursive evaluation; the library must agree on the printed form.
namespace {

struct RandomTree {
    std::mt19937& rng;
    const Env& env;

    std::pair<std::string, double> gen(int depth) {
        std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
        switch (pick(rng)) {
            case 0: {
                std::uniform_real_distribution<double> lit(0.1, 4.0);
                double v = lit(rng);
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.17g", v);
                return {buf, v};
            }
            case 1: {
                auto it = env.begin();
                std::uniform_int_distribution<int> which(0, static_cast<int>(env.size()) - 1);
                std::advance(it, which(rng));
                return {it->first, it->second};
            }
            case 2: {
                auto [s, v] = gen(depth - 1);
                return {"(-(" + s + "))", -v};
            }
            case 3: {
                auto [a, va] = gen(depth - 1);
                auto [b, vb] = gen(depth - 1);
                return {"(" + a + "+" + b + ")", va + vb};
            }
            case 4: {
                auto [a, va] = gen(depth - 1);
                auto [b, vb] = gen(depth - 1);
                return {"(" + a + "*" + b + ")", va * vb};
            }
            case 5: {
                auto [a, va] = gen(depth - 1);
                auto [b, vb] = gen(depth - 1);
                return {"(" + a + "/" + b + ")", va / vb};
            }
            default: {
                auto [a, va] = gen(depth - 1);
                std::uniform_int_distribution<int> fn(0, 3);
                switch (fn(rng)) {
                    case 0: return {"sin(" + a + ")", std::sin(va)};
                    case 1: return {"tanh(" + a + ")", std::tanh(va)};
                    case 2: return {"exp(" + a + ")", std::exp(va)};
                    default: return {"abs(" + a + ")", std::fabs(va)};
                }
            }
        }
    }
};

} // namespace

TEST_CASE("expr: 200 random trees match the independent evaluator") {
    std::mt19937 rng(2024);
    Env env{{"x", 1.25}, {"y", -0.5}, {"z", 3.0}};
    RandomTree gen{rng, env};
    for (int i = 0; i < 200; ++i) {
        auto [text, expected] = gen.gen(4);
        double got = Expression::parse(text).eval(env);
        CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    }
}
