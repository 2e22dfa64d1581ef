#include "xppkit/autorepo.hpp"

#include <algorithm>
#include <array>

#include "util.hpp"

namespace xpp {

using detail::fmt_g15;
using detail::parse_number;
using detail::split_ws;
using detail::trim;

namespace {

constexpr std::array<std::string_view, 21> kNumKeys = {
    "NTST", "NPR", "NMAX", "DS", "DSMIN", "DSMAX", "ParMIN", "ParMAX",
    "NormMIN", "NormMAX", "IAD", "MXBF", "IID", "ITMX", "ITNW", "NWTN",
    "IADS", "xmin", "ymin", "xmax", "ymax"};

constexpr const char* kClassNames[] = {"SEQ", "UEQ", "SLC", "ULC", "BVP", "UZ",
                                       "SN", "SNPO", "HB", "TR", "BP", "PD"};
constexpr const char* kTagNames[] = {"", "HB", "SN", "PD", "SNPO", "TR", "EP", "UZ"};

} // namespace

const char* branch_class_name(BranchClass c) { return kClassNames[static_cast<int>(c)]; }
const char* point_tag_name(PointTag t) { return kTagNames[static_cast<int>(t)]; }

std::optional<double> ContinuationSettings::numeric(std::string_view key) const {
    for (const auto& [k, v] : num)
        if (k == key) return v;
    return std::nullopt;
}

const Branch* BifurcationDiagram::branch(std::string_view name) const {
    for (const auto& b : branches)
        if (b.name == name) return &b;
    return nullptr;
}

const LabeledPoint* BifurcationDiagram::labeled_point(std::string_view name) const {
    for (const auto& p : labeled_points)
        if (p.name == name) return &p;
    return nullptr;
}

std::size_t BifurcationDiagram::point_count() const {
    std::size_t n = 0;
    for (const auto& b : branches) n += b.points.size();
    return n;
}

const BifurcationDiagram* AutoRepo::diagram(std::string_view name) const {
    for (const auto& d : diagrams)
        if (d.name == name) return &d;
    return nullptr;
}

BranchClass classify(int tpar, int typ) {
    if (tpar == 0) {
        switch (typ) {
            case 1: return BranchClass::SEQ;
            case 2: return BranchClass::UEQ;
            case 3: return BranchClass::SLC;
            case 4: return BranchClass::ULC;
            case 8: return BranchClass::BVP;
        }
    } else if (tpar == 9 && typ == 9) {
        return BranchClass::UZ;
    } else if (tpar == typ) {
        switch (tpar) {
            case 1: return BranchClass::SN;
            case 2: return BranchClass::SNPO;
            case 3: return BranchClass::HB;
            case 4: return BranchClass::TR;
            case 5: return BranchClass::BP;
            case 6: return BranchClass::PD;
        }
    }
    throw Error(ErrorKind::UnknownTypePair,
                "(TPar, TYP) = (" + std::to_string(tpar) + ", " + std::to_string(typ) + ")");
}

std::vector<Branch> segment_branches(std::span<const ContinuationPoint> points) {
    std::vector<Branch> out;
    for (const auto& p : points) {
        bool fresh = out.empty() || out.back().points.back().tpar != p.tpar
                     || out.back().points.back().typ != p.typ
                     || out.back().points.back().branch_no != p.branch_no;
        if (fresh) {
            Branch b;
            b.cls = classify(p.tpar, p.typ);
            b.name = "B" + std::to_string(out.size() + 1) + "_" + branch_class_name(b.cls);
            out.push_back(std::move(b));
        }
        out.back().points.push_back(p);
    }
    return out;
}

std::vector<DiagramRange> split_diagrams(std::span<const ContinuationPoint> points,
                                         std::span<const std::string> hot) {
    std::vector<DiagramRange> out;
    int cur_ip1 = -1, cur_ip2 = -1;
    std::vector<double> frozen; // non-active hot values at the diagram start

    auto param_name = [&](int ip) -> std::string {
        if (ip < 1 || static_cast<std::size_t>(ip) > hot.size())
            throw Error(ErrorKind::PointRecordMalformed,
                        "active-parameter index " + std::to_string(ip) + " out of range");
        return hot[static_cast<std::size_t>(ip) - 1];
    };

    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        bool fresh = out.empty() || p.ip1 != cur_ip1 || p.ip2 != cur_ip2;
        if (!fresh) {
            for (std::size_t k = 0; k < hot.size(); ++k) {
                bool active = static_cast<int>(k) + 1 == p.ip1
                              || static_cast<int>(k) + 1 == p.ip2;
                if (!active && p.par_values[k] != frozen[k]) {
                    fresh = true;
                    break;
                }
            }
        }
        if (fresh) {
            if (!out.empty()) out.back().end = i;
            DiagramRange r;
            r.params.push_back(param_name(p.ip1));
            if (p.ip2 != 0) r.params.push_back(param_name(p.ip2));
            r.begin = i;
            out.push_back(std::move(r));
            cur_ip1 = p.ip1;
            cur_ip2 = p.ip2;
            frozen = p.par_values;
        }
    }
    if (!out.empty()) out.back().end = points.size();
    return out;
}

namespace {

struct Sections {
    std::string_view settings, parameters, points, solutions;
    long settings_line = 0, parameters_line = 0, points_line = 0, solutions_line = 0;
};

Sections find_sections(std::string_view src) {
    struct Mark {
        std::string_view header;
        std::size_t pos = std::string_view::npos;
        long line = 0;
    };
    std::array<Mark, 4> marks = {
        Mark{"[settings]"}, Mark{"[parameters]"}, Mark{"[points]"}, Mark{"[solutions]"}};

    detail::LineReader reader{src};
    std::size_t line_start = 0;
    while (true) {
        std::size_t start = reader.pos;
        auto raw = reader.next_raw();
        if (!raw) break;
        auto t = trim(*raw);
        for (auto& m : marks) {
            if (t == m.header && m.pos == std::string_view::npos) {
                m.pos = start;
                m.line = reader.line_no;
            }
        }
        line_start = start;
    }
    (void)line_start;
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (marks[i].pos == std::string_view::npos)
            throw Error(ErrorKind::SectionMissing, std::string(marks[i].header));
        if (i > 0 && marks[i].pos < marks[i - 1].pos)
            throw Error(ErrorKind::SectionMissing,
                        std::string(marks[i].header) + " out of order");
    }
    auto body = [&](std::size_t i) {
        std::size_t begin = src.find('\n', marks[i].pos);
        begin = (begin == std::string_view::npos) ? src.size() : begin + 1;
        std::size_t end = (i + 1 < marks.size()) ? marks[i + 1].pos : src.size();
        return src.substr(begin, end - begin);
    };
    Sections s;
    s.settings = body(0);
    s.parameters = body(1);
    s.points = body(2);
    s.solutions = body(3);
    s.settings_line = marks[0].line;
    s.parameters_line = marks[1].line;
    s.points_line = marks[2].line;
    s.solutions_line = marks[3].line;
    return s;
}

ContinuationSettings parse_settings(std::string_view body, Warnings* warnings) {
    ContinuationSettings set;
    detail::LineReader reader{body};
    while (auto line = reader.next()) {
        auto cells = split_ws(*line);
        if (cells[0] == "UZ") {
            if (cells.size() != 4)
                throw Error(ErrorKind::PointRecordMalformed, "bad UZ condition", reader.line_no);
            UzCondition uz;
            auto idx = parse_number(cells[1]);
            auto thr = parse_number(cells[3]);
            if (!idx || !thr || *idx < 1 || *idx > 9)
                throw Error(ErrorKind::PointRecordMalformed, "bad UZ condition", reader.line_no);
            uz.index = static_cast<int>(*idx);
            uz.param = std::string(cells[2]);
            uz.threshold = *thr;
            for (const auto& existing : set.uz)
                if (existing.index == uz.index)
                    throw Error(ErrorKind::PointRecordMalformed,
                                "duplicate UZ index " + std::to_string(uz.index),
                                reader.line_no);
            set.uz.push_back(uz);
            continue;
        }
        if (cells.size() != 2)
            throw Error(ErrorKind::PointRecordMalformed,
                        "bad settings line '" + std::string(*line) + "'", reader.line_no);
        auto value = parse_number(cells[1]);
        if (!value)
            throw Error(ErrorKind::PointRecordMalformed,
                        "bad settings value '" + std::string(cells[1]) + "'", reader.line_no);
        if (cells[0] == "NPTS") {
            set.npts = static_cast<int>(*value);
            continue;
        }
        if (std::find(kNumKeys.begin(), kNumKeys.end(), cells[0]) == kNumKeys.end())
            warn(warnings, "unknown settings key '" + std::string(cells[0]) + "'");
        set.num.emplace_back(std::string(cells[0]), *value);
    }
    if (set.uz.size() > 9)
        throw Error(ErrorKind::PointRecordMalformed, "more than 9 UZ conditions");
    return set;
}

std::vector<std::string> parse_hot(const Model& model, std::string_view body,
                                   Warnings* warnings) {
    std::vector<std::string> hot;
    detail::LineReader reader{body};
    while (auto line = reader.next()) {
        for (auto tok : split_ws(*line)) hot.emplace_back(tok);
    }
    if (hot.size() > 8)
        throw Error(ErrorKind::DimensionMismatch,
                    "more than 8 hot parameters (" + std::to_string(hot.size()) + ")");
    for (const auto& name : hot) {
        if (!model.parameter(name))
            warn(warnings, "hot parameter '" + name + "' is not declared in the model");
    }
    return hot;
}

std::vector<ContinuationPoint> parse_points(const Model& model, std::string_view body,
                                            std::size_t n_hot, Warnings* warnings) {
    const std::size_t n = model.dynamical_count();
    const std::size_t expected = 8 + n_hot + 2 + 6 * n;

    std::vector<ContinuationPoint> points;
    detail::LineReader reader{body};
    while (auto line = reader.next()) {
        auto cells = split_ws(*line);
        if (cells.size() != expected) {
            if (cells.size() > 10 + n_hot && (cells.size() - 10 - n_hot) % 6 == 0
                && (cells.size() - 10 - n_hot) / 6 != n)
                throw Error(ErrorKind::DimensionMismatch,
                            "point has " + std::to_string((cells.size() - 10 - n_hot) / 6)
                                + " dynamical variables, model has " + std::to_string(n),
                            reader.line_no);
            throw Error(ErrorKind::PointRecordMalformed,
                        "expected " + std::to_string(expected) + " fields, found "
                            + std::to_string(cells.size()),
                        reader.line_no);
        }

        auto intat = [&](std::size_t i) {
            auto v = parse_number(cells[i]);
            if (!v)
                throw Error(ErrorKind::PointRecordMalformed,
                            "bad integer '" + std::string(cells[i]) + "'", reader.line_no);
            return static_cast<int>(*v);
        };
        auto numat = [&](std::size_t i) {
            auto v = parse_number(cells[i]);
            if (!v)
                throw Error(ErrorKind::PointRecordMalformed,
                            "bad number '" + std::string(cells[i]) + "'", reader.line_no);
            return *v;
        };

        ContinuationPoint p;
        p.branch_no = intat(0);
        p.tpar = intat(1);
        p.typ = intat(2);
        p.lab = intat(3);
        p.lab_typ = intat(4);
        p.ip1 = intat(5);
        p.ip2 = intat(6);
        p.idx = intat(7);
        classify(p.tpar, p.typ); // validates the pair
        if (p.lab != 0 && (p.lab_typ < 1 || p.lab_typ > 7))
            throw Error(ErrorKind::PointRecordMalformed,
                        "labeled point with bad type tag " + std::to_string(p.lab_typ),
                        reader.line_no);

        std::size_t c = 8;
        for (std::size_t k = 0; k < n_hot; ++k) p.par_values.push_back(numat(c++));
        p.l2 = numat(c++);
        if (cells[c] == "-") {
            p.period.reset();
            ++c;
        } else {
            p.period = numat(c++);
        }
        for (std::size_t k = 0; k < n; ++k) {
            ContinuationPoint::VarStats s;
            s.initial = numat(c++);
            s.upper = numat(c++);
            s.lower = numat(c++);
            s.average = numat(c++);
            p.u.push_back(s);
        }
        for (std::size_t k = 0; k < n; ++k) p.eig_real.push_back(numat(c++));
        for (std::size_t k = 0; k < n; ++k) p.eig_imag.push_back(numat(c++));

        if (p.is_periodic()) {
            for (std::size_t k = 0; k < n; ++k) {
                const auto& s = p.u[k];
                if (!(s.lower <= s.average && s.average <= s.upper)) {
                    warn(warnings, "point idx " + std::to_string(p.idx)
                                       + ": uL <= uA <= uU violated for variable "
                                       + std::to_string(k + 1));
                    break;
                }
            }
            if (!p.period)
                warn(warnings,
                     "periodic point idx " + std::to_string(p.idx) + " has no period");
        }
        if (p.tpar >= 1 && p.tpar <= 6 && p.ip2 == 0)
            warn(warnings, "two-parameter point idx " + std::to_string(p.idx)
                               + " without a secondary active parameter");
        points.push_back(std::move(p));
    }
    return points;
}

std::vector<SolutionRecord> parse_solutions(const Model& model, std::string_view body) {
    const std::size_t n = model.dynamical_count();
    std::vector<SolutionRecord> out;

    detail::LineReader reader{body};
    while (auto line = reader.next()) {
        auto cells = split_ws(*line);
        if (cells.size() != 3 || cells[0] != "sol")
            throw Error(ErrorKind::PointRecordMalformed,
                        "expected 'sol <label> <n_samples>'", reader.line_no);
        auto lab = parse_number(cells[1]);
        auto count = parse_number(cells[2]);
        if (!lab || !count || *count < 1)
            throw Error(ErrorKind::PointRecordMalformed, "bad solution header", reader.line_no);

        SolutionRecord rec;
        rec.label = static_cast<int>(*lab);
        auto declared = static_cast<std::size_t>(*count);
        for (std::size_t i = 0; i < declared; ++i) {
            auto row = reader.next();
            if (!row)
                throw Error(ErrorKind::SolutionLengthMismatch,
                            "label " + std::to_string(rec.label) + ": declared "
                                + std::to_string(declared) + " samples, found "
                                + std::to_string(i));
            auto rcells = split_ws(*row);
            if (rcells.size() != n + 1)
                throw Error(ErrorKind::SolutionLengthMismatch,
                            "label " + std::to_string(rec.label) + ": sample row has "
                                + std::to_string(rcells.size()) + " fields, expected "
                                + std::to_string(n + 1),
                            reader.line_no);
            std::vector<double> values;
            for (auto cell : rcells) {
                auto v = parse_number(cell);
                if (!v)
                    throw Error(ErrorKind::PointRecordMalformed,
                                "bad sample value '" + std::string(cell) + "'",
                                reader.line_no);
                values.push_back(*v);
            }
            rec.t.push_back(values[0]);
            rec.rows.emplace_back(values.begin() + 1, values.end());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

BifurcationDiagram build_diagram(std::span<const ContinuationPoint> points,
                                 const DiagramRange& range, int diagram_index,
                                 std::span<const std::string> hot,
                                 bool load_labeled_points) {
    BifurcationDiagram bd;
    bd.params = range.params;
    bd.hot.assign(hot.begin(), hot.end());
    bd.name = "BD" + std::to_string(diagram_index) + "_" + range.params[0];
    if (range.params.size() == 2) bd.name += "_" + range.params[1];

    auto slice = points.subspan(range.begin, range.end - range.begin);
    bd.branches = segment_branches(slice);

    if (load_labeled_points) {
        // branch ownership by stream position; positions partition exactly
        int branch_index = 0;
        std::size_t tag_counter = 0;
        for (const auto& branch : bd.branches) {
            ++branch_index;
            for (const auto& p : branch.points) {
                if (p.lab == 0) continue;
                LabeledPoint lp;
                lp.point = p;
                lp.lab = p.lab;
                lp.tag = static_cast<PointTag>(p.lab_typ);
                lp.branch_index = branch_index;
                lp.name = "PT" + std::to_string(++tag_counter) + "_" + point_tag_name(lp.tag);
                bd.labeled_points.push_back(std::move(lp));
            }
        }
    }
    return bd;
}

} // namespace

void attach_special_solutions(const Model& model, AutoRepo& repo,
                              const std::vector<SolutionRecord>& solutions,
                              Warnings* warnings) {
    if (solutions.empty()) return;

    for (std::size_t i = 0; i < solutions.size(); ++i)
        for (std::size_t j = i + 1; j < solutions.size(); ++j)
            if (solutions[i].label == solutions[j].label)
                throw Error(ErrorKind::DuplicateLabel,
                            "label " + std::to_string(solutions[i].label));

    // eligible: the last 1P diagram plus any 2P diagrams after it
    std::size_t first_eligible = 0;
    for (std::size_t i = 0; i < repo.diagrams.size(); ++i)
        if (!repo.diagrams[i].is_two_parameter()) first_eligible = i;

    auto dyn = model.dynamical_names();
    for (const auto& rec : solutions) {
        LabeledPoint* target = nullptr;
        bool in_earlier = false;
        for (std::size_t d = 0; d < repo.diagrams.size(); ++d) {
            for (auto& lp : repo.diagrams[d].labeled_points) {
                if (lp.lab != rec.label) continue;
                if (d >= first_eligible) {
                    target = &lp;
                } else {
                    in_earlier = true;
                }
                break;
            }
            if (target) break;
        }
        if (!target) {
            warn(warnings, in_earlier
                               ? "solution label " + std::to_string(rec.label)
                                     + " targets a diagram before the last 1P continuation; skipped"
                               : "orphan solution label " + std::to_string(rec.label)
                                     + "; skipped");
            continue;
        }
        if (!target->point.is_periodic()) {
            warn(warnings, "solution label " + std::to_string(rec.label)
                               + " targets a non-LC/BVP point; skipped");
            continue;
        }

        Trajectory trj;
        trj.t = rec.t;
        for (std::size_t k = 0; k < dyn.size(); ++k) {
            std::vector<double> samples;
            samples.reserve(rec.rows.size());
            for (const auto& row : rec.rows) samples.push_back(row[k]);
            trj.samples.emplace_back(dyn[k], std::move(samples));
        }
        for (std::size_t k = 0; k < repo.hot.size(); ++k)
            trj.params.emplace_back(repo.hot[k], target->point.par_values[k]);
        if (target->point.period) {
            trj.period = *target->point.period;
        } else {
            trj.period = 1.0;
            warn(warnings, "solution label " + std::to_string(rec.label)
                               + ": point carries no period, assuming 1");
        }
        trj.source_label = target->name;
        if (trj.t.empty() || trj.t.front() != 0.0 || trj.t.back() != 1.0)
            warn(warnings, "solution label " + std::to_string(rec.label)
                               + ": time grid is not normalized to [0,1]");
        target->orbit = std::move(trj);
    }
}

AutoRepo parse_auto(const Model& model, std::string_view source, ParseAutoOptions options,
                    Warnings* warnings) {
    auto sections = find_sections(source);

    AutoRepo repo;
    std::string report = "AR:\n";
    repo.settings = parse_settings(sections.settings, warnings);
    report += "Parsing settings ...completed!\n";
    repo.hot = parse_hot(model, sections.parameters, warnings);
    report += "Parsing hot parameters ...completed!\n";

    auto points = parse_points(model, sections.points, repo.hot.size(), warnings);
    auto ranges = split_diagrams(points, repo.hot);
    int index = 0;
    for (const auto& range : ranges)
        repo.diagrams.push_back(build_diagram(points, range, ++index, repo.hot,
                                              options.load_labeled_points));
    report += "Parsing branches & labeled points ...completed!\n";

    if (options.load_labeled_points && options.load_trajectories) {
        auto solutions = parse_solutions(model, sections.solutions);
        attach_special_solutions(model, repo, solutions, warnings);
    }
    report += "Parsing Special Solutions...completed!\n\nSummary:\n";
    for (const auto& bd : repo.diagrams) {
        if (bd.is_two_parameter())
            report += "    2P-BD - Name: " + bd.name + " - Main: " + bd.params[0]
                      + " - Secondary: " + bd.params[1] + "\n";
        else
            report += "    1P-BD - Name: " + bd.name + " - Main: " + bd.params[0] + "\n";
    }
    repo.report = std::move(report);
    return repo;
}

std::string serialize_auto(const Model& model, const AutoRepo& repo) {
    (void)model;
    std::string out = "[settings]\n";
    out += "NPTS " + std::to_string(repo.settings.npts) + "\n";
    for (const auto& [k, v] : repo.settings.num) out += k + " " + fmt_g15(v) + "\n";
    for (const auto& uz : repo.settings.uz)
        out += "UZ " + std::to_string(uz.index) + " " + uz.param + " "
               + fmt_g15(uz.threshold) + "\n";

    out += "[parameters]\n";
    for (std::size_t i = 0; i < repo.hot.size(); ++i)
        out += (i ? " " : "") + repo.hot[i];
    out += "\n[points]\n";

    for (const auto& bd : repo.diagrams) {
        for (const auto& branch : bd.branches) {
            for (const auto& p : branch.points) {
                out += std::to_string(p.branch_no) + " " + std::to_string(p.tpar) + " "
                       + std::to_string(p.typ) + " " + std::to_string(p.lab) + " "
                       + std::to_string(p.lab_typ) + " " + std::to_string(p.ip1) + " "
                       + std::to_string(p.ip2) + " " + std::to_string(p.idx);
                for (double v : p.par_values) out += " " + fmt_g15(v);
                out += " " + fmt_g15(p.l2);
                out += p.period ? " " + fmt_g15(*p.period) : std::string(" -");
                for (const auto& s : p.u)
                    out += " " + fmt_g15(s.initial) + " " + fmt_g15(s.upper) + " "
                           + fmt_g15(s.lower) + " " + fmt_g15(s.average);
                for (double v : p.eig_real) out += " " + fmt_g15(v);
                for (double v : p.eig_imag) out += " " + fmt_g15(v);
                out += "\n";
            }
        }
    }

    out += "[solutions]\n";
    for (const auto& bd : repo.diagrams) {
        for (const auto& lp : bd.labeled_points) {
            if (!lp.orbit) continue;
            const auto& trj = *lp.orbit;
            out += "sol " + std::to_string(lp.lab) + " " + std::to_string(trj.t.size()) + "\n";
            for (std::size_t i = 0; i < trj.t.size(); ++i) {
                out += fmt_g15(trj.t[i]);
                for (const auto& [name, samples] : trj.samples)
                    out += " " + fmt_g15(samples[i]);
                out += "\n";
            }
        }
    }
    return out;
}

} // namespace xpp
