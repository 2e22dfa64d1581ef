#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "xppkit/analysis.hpp"
#include "xppkit/model.hpp"

using namespace xpp;

static AutoRepo hh_repo() {
    static Model m = parse_model(read_fixture("hh.ode"));
    return parse_auto(m, read_fixture("hh_1p.auto"));
}

TEST_CASE("get_eig: pinned HH slices") {
    auto repo = hh_repo();
    auto eig = get_eig(repo.diagrams[0]);

    // per_branch[2], point 5: real parts sorted ascending (pinned values)
    REQUIRE(eig.per_branch.size() == 3);
    const auto& point5 = eig.per_branch[1][4];
    REQUIRE(point5.size() == 4);
    CHECK(point5[0][0] == 0.0095);
    CHECK(point5[1][0] == 0.7579);
    CHECK(point5[2][0] == 0.7579);
    CHECK(point5[3][0] == 0.8861);
    // the complex pair's imaginary parts co-permuted (ascending on the tie)
    CHECK(point5[1][1] == -0.1);
    CHECK(point5[2][1] == 0.1);

    // per_label row 3: leading branch index, then imaginary parts
    REQUIRE(eig.per_label.size() == 4);
    const auto& row3 = eig.per_label[2];
    REQUIRE(row3.size() == 5);
    CHECK(row3[0][0] == 3); // branch index in both slices
    CHECK(row3[0][1] == 3);
    CHECK(row3[1][1] == 0);
    CHECK(row3[2][1] == 0.8738);
    CHECK(row3[3][1] == -0.8738);
    CHECK(row3[4][1] == 0);
    // real slice of the same row is ascending
    CHECK(row3[1][0] == -0.5);
    CHECK(row3[4][0] == 0.9);
}

TEST_CASE("get_eig: sorted=false returns source order; sorting is idempotent") {
    auto repo = hh_repo();
    auto raw = get_eig(repo.diagrams[0], false);
    // fixture stores branch 2 / point 5 deliberately unsorted
    CHECK(raw.per_branch[1][4][0][0] == 0.8861);
    auto s1 = get_eig(repo.diagrams[0], true);
    auto s2 = get_eig(repo.diagrams[0], true);
    CHECK(s1.per_branch == s2.per_branch);
    CHECK(s1.per_label == s2.per_label);
}

TEST_CASE("get_trj: counts and failure") {
    auto repo = hh_repo();
    auto trjs = get_trj(repo.diagrams[0]);
    REQUIRE(trjs.size() == 2); // PT3 and PT4 carry orbits
    CHECK(trjs[0].source_label == "PT3_SNPO");
    CHECK(trjs[1].source_label == "PT4_EP");

    BifurcationDiagram empty;
    CHECK_THROWS_AS(get_trj(empty), Error);
}

TEST_CASE("get_trj: CK fixture yields nTRJ=366") {
    Model ck = parse_model(read_fixture("ck.ode"));
    auto repo = parse_auto(ck, read_fixture("ck.auto"));
    auto trjs = get_trj(repo.diagrams.back());
    CHECK(trjs.size() == 366);
}

static Trajectory sine_orbit(std::size_t n, double period) {
    Trajectory trj;
    for (std::size_t i = 0; i <= n; ++i) {
        double t = static_cast<double>(i) / n;
        trj.t.push_back(t);
    }
    std::vector<double> v;
    for (double t : trj.t) v.push_back(std::sin(2 * M_PI * t));
    trj.samples.emplace_back("v", v);
    trj.period = period;
    trj.source_label = "PT1_EP";
    return trj;
}

TEST_CASE("average_over_orbit: symmetry, constants, linearity") {
    auto orbit = sine_orbit(1000, 13.7);
    auto v = Expression::parse("v");
    CHECK(std::fabs(average_over_orbit(orbit, v)) < 1e-6);

    Trajectory flat;
    flat.t = {0, 0.5, 1};
    flat.samples.emplace_back("v", std::vector<double>{3, 3, 3});
    flat.period = 5;
    CHECK(average_over_orbit(flat, Expression::parse("2*v+1")) == 7);

    auto g1 = Expression::parse("v^2");
    auto g2 = Expression::parse("sin(v)");
    auto combo = Expression::parse("2.5*v^2+0.75*sin(v)");
    double lhs = average_over_orbit(orbit, combo);
    double rhs = 2.5 * average_over_orbit(orbit, g1) + 0.75 * average_over_orbit(orbit, g2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("average_over_orbit: env layering") {
    Trajectory trj;
    trj.t = {0, 1};
    trj.samples.emplace_back("v", std::vector<double>{2, 2});
    trj.params.emplace_back("k", 10.0);
    trj.period = 3;
    // T resolves to the period, extra symbols come from extra_env
    CHECK(average_over_orbit(trj, Expression::parse("T")) == 3);
    CHECK(average_over_orbit(trj, Expression::parse("k*v+q"), {{"q", 1}}) == 21);
    // collision resolves in favor of the trajectory, with a warning
    Warnings w;
    CHECK(average_over_orbit(trj, Expression::parse("k"), {{"k", -1}}, &w) == 10);
    CHECK(!w.empty());
}

TEST_CASE("average_over_orbit: trapezoid convergence order") {
    // ramp orbit v(t)=t with integrand v^2: exact average 1/3, trapezoid
    // error 1/(6N^2) -- a clean O(N^-2) signal (periodic-smooth integrands
    // converge faster than quadratically and cannot show the order)
    auto integrand = Expression::parse("v^2");
    double errors[3];
    int idx = 0;
    for (std::size_t n : {100u, 1000u, 10000u}) {
        Trajectory orbit;
        for (std::size_t i = 0; i <= n; ++i)
            orbit.t.push_back(static_cast<double>(i) / n);
        orbit.samples.emplace_back("v", orbit.t);
        orbit.period = 2.0;
        errors[idx++] = std::fabs(average_over_orbit(orbit, integrand) - 1.0 / 3.0);
    }
    CHECK(errors[0] < 1e-4);
    CHECK(errors[1] < 1e-6);
    // each 10x refinement buys ~100x accuracy (within +-20%)
    CHECK(errors[0] / errors[1] > 80);
    CHECK(errors[0] / errors[1] < 120);
    CHECK(errors[1] / errors[2] > 80);
    CHECK(errors[1] / errors[2] < 120);
}

TEST_CASE("find_zero_average: argmin |J| and labels") {
    std::vector<Trajectory> trjs;
    for (int j = 0; j < 3; ++j) {
        Trajectory trj;
        trj.t = {0, 1};
        double v = (j == 1) ? 0.05 : (j == 0 ? -2 : 3);
        trj.samples.emplace_back("v", std::vector<double>{v, v});
        trj.params.emplace_back("c", 0.1 + 0.1 * j);
        trj.period = 1;
        trj.source_label = "PT" + std::to_string(j + 1) + "_EP";
        trjs.push_back(trj);
    }
    auto result = find_zero_average(trjs, "c", Expression::parse("v"));
    REQUIRE(result.c.size() == 3);
    CHECK(result.c[0] == doctest::Approx(0.1));
    CHECK(result.c[2] == doctest::Approx(0.3));
    CHECK(result.label == "PT2_EP");
    CHECK(result.J[0] == doctest::Approx(-2));

    CHECK_THROWS_AS(find_zero_average(trjs, "nope", Expression::parse("v")), Error);
}

TEST_CASE("build_manifold: concatenation and parameter columns") {
    Model fhn = parse_model(read_fixture("fhn.ode"));
    auto repo = parse_auto(fhn, read_fixture("fhn.auto"));
    auto trjs = get_trj(repo.diagrams.back());
    REQUIRE(trjs.size() == 12);

    std::vector<std::string> vars = {"v", "h"};
    std::vector<std::string> pars = {"i0"};
    auto surface = build_manifold(trjs, vars, pars);
    CHECK(surface.n_samples == 21);
    CHECK(surface.n_trajectories == 12);

    const auto* vcols = surface.field("v");
    REQUIRE(vcols);
    for (std::size_t j = 0; j < trjs.size(); ++j)
        CHECK((*vcols)[j] == *trjs[j].sample("v")); // bit-exact slicing

    const auto* icols = surface.field("i0");
    REQUIRE(icols);
    for (const auto& col : *icols)
        for (double x : col) CHECK(x == col.front()); // constant columns

    CHECK_THROWS_AS(build_manifold(trjs, std::vector<std::string>{"zz"}, {}), Error);
    auto broken = trjs;
    broken[3].t.pop_back();
    for (auto& [name, col] : broken[3].samples) col.pop_back();
    CHECK_THROWS_AS(build_manifold(broken, vars, {}), Error);
}

TEST_CASE("slow_manifold_projection equals the surface's last row") {
    Model fhn = parse_model(read_fixture("fhn.ode"));
    auto repo = parse_auto(fhn, read_fixture("fhn.auto"));
    auto trjs = get_trj(repo.diagrams.back());
    std::vector<std::string> vars = {"v", "h", "s"};
    auto surface = build_manifold(trjs, vars, {});
    auto curves = slow_manifold_projection(trjs, vars);
    REQUIRE(curves.size() == 3);
    for (std::size_t k = 0; k < vars.size(); ++k) {
        CHECK(curves[k].first == vars[k]);
        const auto& cols = *surface.field(vars[k]);
        REQUIRE(curves[k].second.size() == cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            CHECK(curves[k].second[j] == cols[j].back());
    }
}
