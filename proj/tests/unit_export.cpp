#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "xppkit/dump.hpp"
#include "xppkit/freeze.hpp"
#include "xppkit/model.hpp"
#include "xppkit/plots.hpp"
#include "xppkit/style.hpp"
#include "xppkit/svg.hpp"
#include "xppkit/tables.hpp"

using namespace xpp;

static Model hh() { return parse_model(read_fixture("hh.ode")); }
static AutoRepo hh_repo(const Model& m) {
    return parse_auto(m, read_fixture("hh_1p.auto"));
}

TEST_CASE("style: default legend colors") {
    auto s = PlotStyle::defaults();
    CHECK(s.branch.at(BranchClass::SEQ).color.hex() == "#ff0000");  // stable EQ red
    CHECK(s.branch.at(BranchClass::UEQ).color.hex() == "#000000");  // unstable EQ black
    CHECK(s.branch.at(BranchClass::SLC).color.hex() == "#00ff00");  // stable LC green
    CHECK(s.branch.at(BranchClass::ULC).color.hex() == "#0000ff");  // unstable LC blue
    CHECK(s.marker.at(PointTag::HB).color.hex() == "#ff00ff");      // HB magenta
    CHECK(s.marker.at(PointTag::HB).shape == MarkerShape::Square);
    CHECK(s.marker.at(PointTag::SNPO).color.hex() == "#ffa500");    // SNPO orange
    CHECK(s.marker.at(PointTag::SNPO).shape == MarkerShape::Circle);
    CHECK(s.marker.at(PointTag::SN).color.hex() == "#00ffff");      // SN cyan
    CHECK(s.marker.at(PointTag::SN).shape == MarkerShape::Circle);
}

TEST_CASE("style: overrides patch only their target") {
    auto s = PlotStyle::defaults();
    auto reference = PlotStyle::defaults();
    Warnings w;
    s.apply_override("SEQ=#123456", &w);
    CHECK(s.branch.at(BranchClass::SEQ).color.hex() == "#123456");
    CHECK(s.branch.at(BranchClass::UEQ).color == reference.branch.at(BranchClass::UEQ).color);
    s.apply_override("FontSize=11", &w);
    CHECK(s.font_size == 11);
    s.apply_override("width=8.5", &w);
    CHECK(s.width == 8.5);
    CHECK(w.empty());
    s.apply_override("format=-dpdf", &w); // no effect on vector output
    s.apply_override("mystery=1", &w);
    CHECK(w.size() == 2);

    // branch color override also re-colors the matching marker tag
    s.apply_override("SN=0.5,0.5,0.5");
    CHECK(s.marker.at(PointTag::SN).color.hex() == "#808080");
}

TEST_CASE("style: JSON document") {
    auto s = PlotStyle::defaults();
    s.apply_json(R"({"SEQ": "#112233", "FontSize": 12})");
    CHECK(s.branch.at(BranchClass::SEQ).color.hex() == "#112233");
    CHECK(s.font_size == 12);
}

TEST_CASE("svg: number formatting and document shape") {
    CHECK(svg::num(0.125) == "0.125");
    CHECK(svg::num(-0.0) == "0");
    CHECK(svg::num(1234567.0) == "1.23457e+06"); // 6 significant digits
    svg::Document doc(100, 50);
    doc.circle(1, 2, 3, "#ff0000", "dot");
    auto text = doc.str();
    CHECK(text.find("viewBox=\"0 0 100 50\"") != std::string::npos);
    CHECK(text.find("<circle class=\"dot\" cx=\"1\" cy=\"2\" r=\"3\" fill=\"#ff0000\"/>")
          != std::string::npos);
}

TEST_CASE("plots: determinism and legend colors in the HH diagram") {
    Model m = hh();
    auto repo = hh_repo(m);
    const auto& bd = repo.diagrams[0];
    auto one = emit_diagram_plot(m, bd);
    auto two = emit_diagram_plot(m, bd);
    CHECK(one == two);
    CHECK(one.find("stroke=\"#ff0000\"") != std::string::npos); // SEQ branch
    CHECK(one.find("stroke=\"#000000\"") != std::string::npos); // UEQ branch
    CHECK(one.find("stroke=\"#00ff00\"") != std::string::npos); // SLC branch

    // Standard mode draws lower+upper extrema for the periodic branch
    CHECK(one.find("B3_SLC.lower") != std::string::npos);
    CHECK(one.find("B3_SLC.upper") != std::string::npos);
    auto upper_only = emit_diagram_plot(m, bd, {}, PeriodicBranchMode::Upper);
    CHECK(upper_only.find("B3_SLC\"") != std::string::npos);
    CHECK(upper_only.find("B3_SLC.lower") == std::string::npos);
}

TEST_CASE("plots: branch filter equals no filter when all branches kept") {
    Model m = hh();
    auto repo = hh_repo(m);
    const auto& bd = repo.diagrams[0];
    auto all = emit_diagram_plot(m, bd, {}, PeriodicBranchMode::Standard,
                                 PlotStyle::defaults(), {1, 2, 3});
    CHECK(all == emit_diagram_plot(m, bd));
    auto partial = emit_diagram_plot(m, bd, {}, PeriodicBranchMode::Standard,
                                     PlotStyle::defaults(), {1});
    CHECK(partial.find("B2_UEQ") == std::string::npos);
}

TEST_CASE("plots: labeled points, filters union, marker shapes") {
    Model m = hh();
    auto repo = hh_repo(m);
    const auto& bd = repo.diagrams[0];
    auto all = emit_labeled_points_plot(m, bd);
    CHECK(all.find("PT2_HB") != std::string::npos);
    CHECK(all.find("<rect class=\"BD1_i0.PT2_HB\"") != std::string::npos); // square
    CHECK(all.find("fill=\"#ff00ff\"") != std::string::npos);              // magenta
    CHECK(all.find("<circle class=\"BD1_i0.PT3_SNPO\"") != std::string::npos);

    // union: branch 1's points plus point index 3
    auto some = emit_labeled_points_plot(m, bd, {}, PlotStyle::defaults(), {1}, {3});
    CHECK(some.find("PT1_EP") != std::string::npos);
    CHECK(some.find("PT3_SNPO") != std::string::npos);
    CHECK(some.find("PT2_HB") == std::string::npos);
}

TEST_CASE("plots: eig plot combos and branch filtering") {
    Model m = hh();
    auto repo = hh_repo(m);
    const auto& bd = repo.diagrams[0];

    auto complex_plane = emit_eig_plot(m, bd, {"EigR", "EigI"});
    CHECK(complex_plane.find("unit_circle") != std::string::npos);

    auto along_param = emit_eig_plot(m, bd, {"i0", "EigR"});
    CHECK(along_param.find("B1_SEQ.eig1") != std::string::npos);

    // deleting a branch removes its locus and its labeled points
    auto filtered = emit_eig_plot(m, bd, {"i0", "EigR"}, PlotStyle::defaults(), {1, 2});
    CHECK(filtered.find("B3_SLC") == std::string::npos);
    CHECK(filtered.find("PT3_SNPO") == std::string::npos);
    CHECK(filtered.find("PT2_HB") != std::string::npos);

    CHECK_THROWS_AS(emit_eig_plot(m, bd, {"i0", "v"}), Error);   // no Eig token
    CHECK_THROWS_AS(emit_eig_plot(m, bd, {"EigR"}), Error);      // bad arity
}

TEST_CASE("plots: nullclines and axis swap") {
    auto nc = parse_nullclines(fixture_path("nc_n_v.dat"));
    auto plain = emit_nullclines_plot(nc);
    CHECK(plain.find("stroke=\"#ffa500\"") != std::string::npos); // x-var orange
    CHECK(plain.find("stroke=\"#87cefa\"") != std::string::npos); // y-var light blue
    auto swapped = emit_nullclines_plot(nc, {"v", "n"});
    CHECK(swapped != plain);
    CHECK_THROWS_AS(emit_nullclines_plot(nc, {"v", "zz"}), Error); // AxisNotInPair

    NullclinePair empty{"a", "b", {}, {}};
    auto doc = emit_nullclines_plot(empty);
    CHECK(doc.find("<svg") != std::string::npos); // valid SVG, axes only
}

TEST_CASE("plots: 2P diagram defaults and 3D axes") {
    Model m = hh();
    auto repo = parse_auto(m, read_fixture("hh_1p2p.auto"));
    const auto& bd2 = repo.diagrams[1];
    CHECK(bd2.is_two_parameter());
    auto plot2p = emit_diagram_plot(m, bd2); // defaults to (i0, gk)
    CHECK(plot2p.find("B1_HB") != std::string::npos);

    auto plot3d = emit_diagram_plot(m, repo.diagrams[0], {"i0", "gk", "v"});
    CHECK(plot3d == emit_diagram_plot(m, repo.diagrams[0], {"i0", "gk", "v"}));
    CHECK_THROWS_AS(emit_diagram_plot(m, bd2, {"i0", "nosuch"}), Error);
}

TEST_CASE("freeze: writing and re-reading") {
    Model m = hh();
    auto repo = hh_repo(m);
    const auto& bd = repo.diagrams[0];
    auto text = write_points(m, bd); // defaults: (i0, v)
    auto rows = parse_freeze(text);
    REQUIRE(rows.size() == bd.point_count());

    // EQ rows have ylo == yhi; LC rows carry the extrema; codes match TYP
    std::size_t i = 0;
    for (const auto& branch : bd.branches) {
        for (const auto& p : branch.points) {
            CHECK(rows[i].x == p.par_values[0]);
            CHECK(rows[i].type == p.typ);
            if (p.is_periodic()) {
                CHECK(rows[i].y_lower == p.u[0].lower);
                CHECK(rows[i].y_upper == p.u[0].upper);
            } else {
                CHECK(rows[i].y_lower == rows[i].y_upper);
            }
            ++i;
        }
    }
    CHECK(rows[0].branch == 1);
    CHECK(rows.back().branch == 3);

    // 2P diagrams are refused
    auto repo2 = parse_auto(m, read_fixture("hh_1p2p.auto"));
    CHECK_THROWS_AS(write_points(m, repo2.diagrams[1]), Error);
    CHECK_THROWS_AS(write_points(m, bd, {{"i0", "nosuchvar"}}), Error);
}

TEST_CASE("dump: JSON round-trip of the full repository") {
    Model m = hh();
    for (const char* name : {"hh_1p.auto", "hh_1p2p.auto", "hh_multi.auto"}) {
        auto repo = parse_auto(m, read_fixture(name));
        auto again = autorepo_from_json(dump_json(repo));
        CHECK(again == repo);
    }
}

TEST_CASE("dump: CSV shapes") {
    Model m = hh();
    auto table = parse_data(parse_model(read_fixture("ml.ode")),
                            "0 1 2 3\n1 4 5 6\n");
    auto csv = csv_of_table(table);
    CHECK(csv.substr(0, csv.find('\n')) == "t,v,n,stim");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    std::vector<std::vector<double>> cols = {{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}};
    auto field_csv = csv_of_surface_field("v", cols);
    CHECK(std::count(field_csv.begin(), field_csv.end(), '\n') == 5); // header + 4 rows
    CHECK(field_csv.substr(0, field_csv.find('\n')) == "v_1,v_2,v_3");

    auto repo = hh_repo(m);
    auto branch_csv = csv_of_branch(repo.diagrams[0].branches[0], repo.hot,
                                    m.dynamical_names());
    CHECK(branch_csv.find("idx,tpar,typ,lab,i0,gk,gna,gl,l2,period,v_ini")
          != std::string::npos);
    CHECK(std::count(branch_csv.begin(), branch_csv.end(), '\n') == 5); // header + 4 points
}
