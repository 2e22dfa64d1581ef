#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "xppkit/autorepo.hpp"
#include "xppkit/model.hpp"

using namespace xpp;

static Model hh() { return parse_model(read_fixture("hh.ode")); }

TEST_CASE("classify: all 12 table rows and nothing else") {
    CHECK(classify(0, 1) == BranchClass::SEQ);
    CHECK(classify(0, 2) == BranchClass::UEQ);
    CHECK(classify(0, 3) == BranchClass::SLC);
    CHECK(classify(0, 4) == BranchClass::ULC);
    CHECK(classify(0, 8) == BranchClass::BVP);
    CHECK(classify(9, 9) == BranchClass::UZ);
    CHECK(classify(1, 1) == BranchClass::SN);
    CHECK(classify(2, 2) == BranchClass::SNPO);
    CHECK(classify(3, 3) == BranchClass::HB);
    CHECK(classify(4, 4) == BranchClass::TR);
    CHECK(classify(5, 5) == BranchClass::BP);
    CHECK(classify(6, 6) == BranchClass::PD);
    CHECK_THROWS_AS(classify(0, 5), Error);
    CHECK_THROWS_AS(classify(7, 7), Error);
    CHECK_THROWS_AS(classify(1, 2), Error);
}

static ContinuationPoint mk_point(int tpar, int typ, int branch_no = 1) {
    ContinuationPoint p;
    p.tpar = tpar;
    p.typ = typ;
    p.branch_no = branch_no;
    return p;
}

TEST_CASE("segment_branches: maximal runs") {
    std::vector<ContinuationPoint> pts;
    for (int typ : {1, 1, 2, 2, 2, 1}) pts.push_back(mk_point(0, typ));
    auto branches = segment_branches(pts);
    REQUIRE(branches.size() == 3);
    CHECK(branches[0].points.size() == 2);
    CHECK(branches[1].points.size() == 3);
    CHECK(branches[2].points.size() == 1);
    CHECK(branches[0].name == "B1_SEQ");
    CHECK(branches[1].name == "B2_UEQ");
    CHECK(branches[2].name == "B3_SEQ");

    // all-identical run stays one branch; branch_no change forces a split
    std::vector<ContinuationPoint> same(7, mk_point(0, 3));
    CHECK(segment_branches(same).size() == 1);
    same[4].branch_no = 2;
    CHECK(segment_branches(same).size() == 3);
    CHECK(segment_branches({}).empty());
}

TEST_CASE("segment_branches: run-length-encoding oracle") {
    std::mt19937 rng(7);
    const int codes[][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 8}, {9, 9}};
    std::uniform_int_distribution<int> code(0, 5), len(1, 200), flip(0, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ContinuationPoint> pts;
        int n = len(rng) * 5;
        int branch_no = 1;
        for (int i = 0; i < n; ++i) {
            auto& c = codes[code(rng)];
            if (flip(rng) == 0) ++branch_no;
            pts.push_back(mk_point(c[0], c[1], branch_no));
        }
        // independent oracle: run-length encoding over (tpar, typ, branch_no)
        std::size_t runs = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i == 0 || pts[i].tpar != pts[i - 1].tpar || pts[i].typ != pts[i - 1].typ
                || pts[i].branch_no != pts[i - 1].branch_no)
                ++runs;
        }
        auto branches = segment_branches(pts);
        REQUIRE(branches.size() == runs);
        std::size_t total = 0;
        for (const auto& b : branches) total += b.points.size();
        CHECK(total == pts.size());
    }
}

TEST_CASE("split_diagrams: active-set and frozen-value switches") {
    auto p1 = [](double a, double b) {
        auto p = mk_point(0, 1);
        p.ip1 = 1;
        p.par_values = {a, b};
        return p;
    };
    auto p2 = [](double a, double b) {
        auto p = mk_point(3, 3);
        p.ip1 = 1;
        p.ip2 = 2;
        p.par_values = {a, b};
        return p;
    };
    std::vector<std::string> hot = {"i0", "gk"};

    std::vector<ContinuationPoint> pts = {p1(1, 36), p1(2, 36), p1(1, 30), p2(1, 30),
                                          p2(2, 31), p1(5, 30)};
    auto ranges = split_diagrams(pts, hot);
    REQUIRE(ranges.size() == 4);
    CHECK(ranges[0].params == std::vector<std::string>{"i0"});
    CHECK(ranges[1].params == std::vector<std::string>{"i0"}); // gk moved 36 -> 30
    CHECK(ranges[2].params == std::vector<std::string>{"i0", "gk"});
    CHECK(ranges[3].params == std::vector<std::string>{"i0"});
    CHECK(ranges[2].begin == 3);
    CHECK(ranges[2].end == 5);

    CHECK(split_diagrams({pts.begin(), pts.begin() + 2}, hot).size() == 1);
}

TEST_CASE("parse_auto: HH 1P fixture structure and report") {
    Model m = hh();
    auto repo = parse_auto(m, read_fixture("hh_1p.auto"));
    CHECK(repo.report.find("1P-BD - Name: BD1_i0 - Main: i0") != std::string::npos);
    CHECK(repo.settings.npts == 16);
    CHECK(repo.settings.numeric("NTST") == doctest::Approx(50));
    CHECK(repo.hot == std::vector<std::string>{"i0", "gk", "gna", "gl"});

    REQUIRE(repo.diagrams.size() == 1);
    const auto& bd = repo.diagrams[0];
    CHECK(bd.name == "BD1_i0");
    CHECK(!bd.is_two_parameter());
    REQUIRE(bd.branches.size() == 3);
    CHECK(bd.branches[0].name == "B1_SEQ");
    CHECK(bd.branches[1].name == "B2_UEQ");
    CHECK(bd.branches[2].name == "B3_SLC");
    CHECK(bd.point_count() == 16);

    REQUIRE(bd.labeled_points.size() == 4);
    CHECK(bd.labeled_points[0].name == "PT1_EP");
    CHECK(bd.labeled_points[1].name == "PT2_HB");
    CHECK(bd.labeled_points[2].name == "PT3_SNPO");
    CHECK(bd.labeled_points[2].branch_index == 3);
    CHECK(bd.labeled_points[3].name == "PT4_EP");

    // orbits attached to the LC labeled points only
    CHECK(bd.labeled_points[2].orbit.has_value());
    CHECK(bd.labeled_points[3].orbit.has_value());
    CHECK(!bd.labeled_points[0].orbit.has_value());
    const auto& trj = *bd.labeled_points[2].orbit;
    CHECK(trj.t.front() == 0);
    CHECK(trj.t.back() == 1);
    CHECK(trj.source_label == "PT3_SNPO");
    CHECK(trj.period == doctest::Approx(8.5 + 0.05 * 11));
    CHECK(trj.sample("v") != nullptr);
    CHECK(trj.has_param("gk"));
}

TEST_CASE("parse_auto: 2P and multi-diagram fixtures") {
    Model m = hh();
    auto repo = parse_auto(m, read_fixture("hh_1p2p.auto"));
    REQUIRE(repo.diagrams.size() == 2);
    CHECK(repo.diagrams[1].name == "BD2_i0_gk");
    CHECK(repo.diagrams[1].is_two_parameter());
    CHECK(repo.report.find("2P-BD - Name: BD2_i0_gk - Main: i0 - Secondary: gk")
          != std::string::npos);
    CHECK(repo.diagrams[1].branches[0].cls == BranchClass::HB);

    auto multi = parse_auto(m, read_fixture("hh_multi.auto"));
    REQUIRE(multi.diagrams.size() == 3);
    CHECK(multi.diagrams[0].name == "BD1_i0");
    CHECK(multi.diagrams[1].name == "BD2_i0");
    CHECK(multi.diagrams[2].name == "BD3_i0_gk");
}

TEST_CASE("parse_auto: loading flags are monotone") {
    Model m = hh();
    auto source = read_fixture("hh_1p.auto");
    auto full = parse_auto(m, source);
    auto no_trj = parse_auto(m, source, {true, false});
    auto no_lab = parse_auto(m, source, {false, false});

    // removing the orbits from the full parse yields the no-trajectory parse
    auto stripped = full;
    for (auto& bd : stripped.diagrams)
        for (auto& lp : bd.labeled_points) lp.orbit.reset();
    CHECK(stripped == no_trj);

    for (const auto& bd : no_lab.diagrams) CHECK(bd.labeled_points.empty());
    CHECK(no_lab.diagrams[0].point_count() == full.diagrams[0].point_count());
}

TEST_CASE("parse_auto: errors and warnings") {
    Model m = hh();
    CHECK_THROWS_AS(parse_auto(m, "[settings]\n[parameters]\n[points]\n"), Error); // no [solutions]
    try {
        parse_auto(m, "[settings]\n[parameters]\ni0\n[points]\n1 0 1 0 0 1 0 1 5\n[solutions]\n");
        FAIL("expected PointRecordMalformed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PointRecordMalformed);
    }

    // orphan solution label warns, repo unchanged
    auto source = read_fixture("hh_1p.auto");
    auto pos = source.find("sol 3");
    auto mutated = source.substr(0, pos) + "sol 999" + source.substr(pos + 5);
    Warnings w;
    auto repo = parse_auto(m, mutated, {}, &w);
    bool warned = false;
    for (const auto& msg : w)
        if (msg.find("999") != std::string::npos) warned = true;
    CHECK(warned);
    CHECK(!repo.diagrams[0].labeled_points[2].orbit.has_value());
}

TEST_CASE("attach_special_solutions: duplicate label is an error") {
    Model m = hh();
    auto repo = parse_auto(m, read_fixture("hh_1p.auto"), {true, false});
    SolutionRecord rec;
    rec.label = 3;
    rec.t = {0, 1};
    rec.rows = {{0, 0, 0, 0}, {0, 0, 0, 0}};
    std::vector<SolutionRecord> sols = {rec, rec};
    CHECK_THROWS_AS(attach_special_solutions(m, repo, sols), Error);
}

TEST_CASE("serialize_auto: byte-exact round-trip on canonical fixtures") {
    Model hh_model = hh();
    for (const char* name : {"hh_1p.auto", "hh_1p2p.auto", "hh_multi.auto"}) {
        auto source = read_fixture(name);
        auto repo = parse_auto(hh_model, source);
        CHECK(serialize_auto(hh_model, repo) == source);
    }
    Model ck = parse_model(read_fixture("ck.ode"));
    auto source = read_fixture("ck.auto");
    CHECK(serialize_auto(ck, parse_auto(ck, source)) == source);
    Model fhn = parse_model(read_fixture("fhn.ode"));
    auto fsource = read_fixture("fhn.auto");
    CHECK(serialize_auto(fhn, parse_auto(fhn, fsource)) == fsource);
}

TEST_CASE("parse_auto: branch sizes partition each diagram") {
    Model m = hh();
    auto repo = parse_auto(m, read_fixture("hh_multi.auto"));
    for (const auto& bd : repo.diagrams) {
        std::size_t total = 0;
        int max_idx = 0;
        for (const auto& b : bd.branches) {
            total += b.points.size();
            for (const auto& p : b.points) max_idx = std::max(max_idx, p.idx);
        }
        CHECK(total == bd.point_count());
        CHECK(total == static_cast<std::size_t>(max_idx));
    }
}
