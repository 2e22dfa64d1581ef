#include "xppkit/dump.hpp"

#include <json.hpp>

#include "util.hpp"

namespace xpp {

namespace {

using nlohmann::json;

json point_to_json(const ContinuationPoint& p) {
    json u = json::array();
    for (const auto& s : p.u) u.push_back({s.initial, s.upper, s.lower, s.average});
    json j{{"branch_no", p.branch_no}, {"tpar", p.tpar},   {"typ", p.typ},
           {"lab", p.lab},             {"lab_typ", p.lab_typ},
           {"ip1", p.ip1},             {"ip2", p.ip2},     {"idx", p.idx},
           {"par", p.par_values},      {"l2", p.l2},
           {"u", std::move(u)},        {"eig_real", p.eig_real},
           {"eig_imag", p.eig_imag}};
    if (p.period) j["period"] = *p.period;
    else j["period"] = nullptr;
    return j;
}

ContinuationPoint point_from_json(const json& j) {
    ContinuationPoint p;
    p.branch_no = j.at("branch_no").get<int>();
    p.tpar = j.at("tpar").get<int>();
    p.typ = j.at("typ").get<int>();
    p.lab = j.at("lab").get<int>();
    p.lab_typ = j.at("lab_typ").get<int>();
    p.ip1 = j.at("ip1").get<int>();
    p.ip2 = j.at("ip2").get<int>();
    p.idx = j.at("idx").get<int>();
    p.par_values = j.at("par").get<std::vector<double>>();
    p.l2 = j.at("l2").get<double>();
    if (!j.at("period").is_null()) p.period = j.at("period").get<double>();
    for (const auto& row : j.at("u")) {
        ContinuationPoint::VarStats s;
        s.initial = row.at(0).get<double>();
        s.upper = row.at(1).get<double>();
        s.lower = row.at(2).get<double>();
        s.average = row.at(3).get<double>();
        p.u.push_back(s);
    }
    p.eig_real = j.at("eig_real").get<std::vector<double>>();
    p.eig_imag = j.at("eig_imag").get<std::vector<double>>();
    return p;
}

json trajectory_to_json(const Trajectory& trj) {
    json samples = json::array();
    for (const auto& [name, values] : trj.samples) samples.push_back({name, values});
    json params = json::array();
    for (const auto& [name, value] : trj.params) params.push_back({name, value});
    return {{"t", trj.t},
            {"samples", std::move(samples)},
            {"params", std::move(params)},
            {"period", trj.period},
            {"source_label", trj.source_label}};
}

Trajectory trajectory_from_json(const json& j) {
    Trajectory trj;
    trj.t = j.at("t").get<std::vector<double>>();
    for (const auto& row : j.at("samples"))
        trj.samples.emplace_back(row.at(0).get<std::string>(),
                                 row.at(1).get<std::vector<double>>());
    for (const auto& row : j.at("params"))
        trj.params.emplace_back(row.at(0).get<std::string>(), row.at(1).get<double>());
    trj.period = j.at("period").get<double>();
    trj.source_label = j.at("source_label").get<std::string>();
    return trj;
}

BranchClass branch_class_from_name(const std::string& name) {
    for (int i = 0; i < 12; ++i) {
        auto c = static_cast<BranchClass>(i);
        if (name == branch_class_name(c)) return c;
    }
    throw Error(ErrorKind::UnknownTypePair, "unknown branch class '" + name + "'");
}

PointTag point_tag_from_name(const std::string& name) {
    for (int i = 1; i <= 7; ++i) {
        auto t = static_cast<PointTag>(i);
        if (name == point_tag_name(t)) return t;
    }
    throw Error(ErrorKind::UnknownTypePair, "unknown point tag '" + name + "'");
}

std::string csv_cell(double v) { return detail::fmt_g15(v); }

} // namespace

std::string dump_json(const AutoRepo& repo) {
    json settings{{"npts", repo.settings.npts}};
    settings["num"] = json::array();
    for (const auto& [key, value] : repo.settings.num) settings["num"].push_back({key, value});
    settings["uz"] = json::array();
    for (const auto& uz : repo.settings.uz)
        settings["uz"].push_back(
            {{"index", uz.index}, {"param", uz.param}, {"threshold", uz.threshold}});

    json diagrams = json::array();
    for (const auto& bd : repo.diagrams) {
        json branches = json::array();
        for (const auto& branch : bd.branches) {
            json points = json::array();
            for (const auto& p : branch.points) points.push_back(point_to_json(p));
            branches.push_back({{"class", branch_class_name(branch.cls)},
                                {"name", branch.name},
                                {"points", std::move(points)}});
        }
        json labeled = json::array();
        for (const auto& lp : bd.labeled_points) {
            json entry{{"lab", lp.lab},
                       {"tag", point_tag_name(lp.tag)},
                       {"name", lp.name},
                       {"branch_index", lp.branch_index},
                       {"point", point_to_json(lp.point)}};
            entry["orbit"] = lp.orbit ? trajectory_to_json(*lp.orbit) : json(nullptr);
            labeled.push_back(std::move(entry));
        }
        diagrams.push_back({{"name", bd.name},
                            {"params", bd.params},
                            {"hot", bd.hot},
                            {"branches", std::move(branches)},
                            {"labeled_points", std::move(labeled)}});
    }

    json doc{{"settings", std::move(settings)},
             {"hot", repo.hot},
             {"diagrams", std::move(diagrams)},
             {"report", repo.report}};
    return doc.dump(2) + "\n";
}

AutoRepo autorepo_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::BadRow, std::string("JSON parse failure: ") + e.what());
    }
    AutoRepo repo;
    const auto& settings = doc.at("settings");
    repo.settings.npts = settings.at("npts").get<int>();
    for (const auto& row : settings.at("num"))
        repo.settings.num.emplace_back(row.at(0).get<std::string>(), row.at(1).get<double>());
    for (const auto& row : settings.at("uz"))
        repo.settings.uz.push_back({row.at("index").get<int>(),
                                    row.at("param").get<std::string>(),
                                    row.at("threshold").get<double>()});
    repo.hot = doc.at("hot").get<std::vector<std::string>>();
    for (const auto& jd : doc.at("diagrams")) {
        BifurcationDiagram bd;
        bd.name = jd.at("name").get<std::string>();
        bd.params = jd.at("params").get<std::vector<std::string>>();
        bd.hot = jd.at("hot").get<std::vector<std::string>>();
        for (const auto& jb : jd.at("branches")) {
            Branch branch;
            branch.cls = branch_class_from_name(jb.at("class").get<std::string>());
            branch.name = jb.at("name").get<std::string>();
            for (const auto& jp : jb.at("points")) branch.points.push_back(point_from_json(jp));
            bd.branches.push_back(std::move(branch));
        }
        for (const auto& jl : jd.at("labeled_points")) {
            LabeledPoint lp;
            lp.lab = jl.at("lab").get<int>();
            lp.tag = point_tag_from_name(jl.at("tag").get<std::string>());
            lp.name = jl.at("name").get<std::string>();
            lp.branch_index = jl.at("branch_index").get<int>();
            lp.point = point_from_json(jl.at("point"));
            if (!jl.at("orbit").is_null()) lp.orbit = trajectory_from_json(jl.at("orbit"));
            bd.labeled_points.push_back(std::move(lp));
        }
        repo.diagrams.push_back(std::move(bd));
    }
    if (doc.contains("report")) repo.report = doc.at("report").get<std::string>();
    return repo;
}

std::string dump_json(const SimulationTable& table) {
    json columns = json::array();
    for (const auto& [name, values] : table.columns) columns.push_back({name, values});
    json doc{{"row_count", table.row_count}, {"columns", std::move(columns)}};
    return doc.dump(2) + "\n";
}

std::string dump_json(const Surface& surface) {
    json fields = json::array();
    for (const auto& [name, cols] : surface.fields) fields.push_back({name, cols});
    json doc{{"n_samples", surface.n_samples},
             {"n_trajectories", surface.n_trajectories},
             {"fields", std::move(fields)}};
    return doc.dump(2) + "\n";
}

std::string dump_json(const std::vector<std::pair<std::string, std::vector<double>>>& curves) {
    json doc = json::array();
    for (const auto& [name, values] : curves) doc.push_back({name, values});
    return doc.dump(2) + "\n";
}

std::string csv_of_table(const SimulationTable& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c].first;
    }
    out += '\n';
    for (std::size_t r = 0; r < table.row_count; ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c) out += ',';
            out += csv_cell(table.columns[c].second[r]);
        }
        out += '\n';
    }
    return out;
}

std::string csv_of_branch(const Branch& branch, const std::vector<std::string>& hot,
                          const std::vector<std::string>& dynamical) {
    std::string out = "idx,tpar,typ,lab";
    for (const auto& name : hot) out += "," + name;
    out += ",l2,period";
    for (const auto& name : dynamical)
        out += "," + name + "_ini," + name + "_up," + name + "_lo," + name + "_avg";
    std::size_t n_eig = branch.points.empty() ? dynamical.size()
                                              : branch.points.front().eig_real.size();
    for (std::size_t k = 1; k <= n_eig; ++k) {
        out += ",eig" + std::to_string(k) + "_re,eig" + std::to_string(k) + "_im";
    }
    out += '\n';
    for (const auto& p : branch.points) {
        out += std::to_string(p.idx) + ',' + std::to_string(p.tpar) + ','
               + std::to_string(p.typ) + ',' + std::to_string(p.lab);
        for (double v : p.par_values) out += ',' + csv_cell(v);
        out += ',' + csv_cell(p.l2);
        out += ',';
        out += p.period ? csv_cell(*p.period) : std::string();
        for (const auto& s : p.u)
            out += ',' + csv_cell(s.initial) + ',' + csv_cell(s.upper) + ','
                   + csv_cell(s.lower) + ',' + csv_cell(s.average);
        for (std::size_t k = 0; k < p.eig_real.size(); ++k)
            out += ',' + csv_cell(p.eig_real[k]) + ',' + csv_cell(p.eig_imag[k]);
        out += '\n';
    }
    return out;
}

std::string csv_of_trajectory(const Trajectory& trj) {
    std::string out = "t";
    for (const auto& [name, values] : trj.samples) out += "," + name;
    out += '\n';
    for (std::size_t i = 0; i < trj.t.size(); ++i) {
        out += csv_cell(trj.t[i]);
        for (const auto& [name, values] : trj.samples) out += ',' + csv_cell(values[i]);
        out += '\n';
    }
    return out;
}

std::string csv_of_surface_field(const std::string& name,
                                 const std::vector<std::vector<double>>& columns) {
    std::string out;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (j) out += ',';
        out += name + "_" + std::to_string(j + 1);
    }
    out += '\n';
    std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (j) out += ',';
            out += csv_cell(columns[j][i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace xpp
