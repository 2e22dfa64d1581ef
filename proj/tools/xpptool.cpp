// Command-line front end for the xppkit library: parse XPPAUT output files,
// run the post-processing analyses, and emit SVG/CSV/JSON/freeze files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "xppkit/analysis.hpp"
#include "xppkit/autorepo.hpp"
#include "xppkit/dump.hpp"
#include "xppkit/expr.hpp"
#include "xppkit/freeze.hpp"
#include "xppkit/model.hpp"
#include "xppkit/plots.hpp"
#include "xppkit/style.hpp"
#include "xppkit/tables.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitAnalysis = 3;

// Parse failures (bad input files / expressions) exit 2; failures of a
// well-formed request (analysis, export) exit 3.
int exit_code_of(xpp::ErrorKind kind) {
    using K = xpp::ErrorKind;
    switch (kind) {
        case K::NoOrbits:
        case K::GridLengthMismatch:
        case K::UnknownName:
        case K::TwoParameterDiagram:
        case K::UnknownAxisName:
        case K::InvalidAxisCombo:
        case K::AxisNotInPair:
        case K::UnsupportedTarget:
            return kExitAnalysis;
        default:
            return kExitParse;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw xpp::Error(xpp::ErrorKind::IoError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw xpp::Error(xpp::ErrorKind::IoError, "cannot write '" + path + "'");
    out << content;
}

void print_warnings(const xpp::Warnings& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

struct Inputs {
    std::string ode_path;
    std::string auto_path;
    std::string bd_name; // name, 1-based ordinal, or empty = last

    xpp::Model model;
    xpp::AutoRepo repo;

    void load(xpp::Warnings& warnings, bool need_auto = true) {
        model = xpp::parse_model(read_file(ode_path), &warnings);
        if (need_auto) repo = xpp::parse_auto(model, read_file(auto_path), {}, &warnings);
    }

    const xpp::BifurcationDiagram& diagram() const {
        if (repo.diagrams.empty())
            throw xpp::Error(xpp::ErrorKind::SectionMissing, "repository holds no diagrams");
        if (bd_name.empty()) return repo.diagrams.back();
        if (const auto* bd = repo.diagram(bd_name)) return *bd;
        char* end = nullptr;
        long ordinal = std::strtol(bd_name.c_str(), &end, 10);
        if (end && *end == '\0' && ordinal >= 1
            && ordinal <= static_cast<long>(repo.diagrams.size()))
            return repo.diagrams[static_cast<std::size_t>(ordinal - 1)];
        std::string available;
        for (const auto& bd : repo.diagrams) {
            if (!available.empty()) available += ", ";
            available += bd.name;
        }
        throw xpp::Error(xpp::ErrorKind::UnknownName,
                         "no diagram '" + bd_name + "' (available: " + available + ")");
    }
};

xpp::PlotStyle make_style(const std::vector<std::string>& overrides,
                          const std::string& style_file, xpp::Warnings& warnings) {
    auto style = xpp::PlotStyle::defaults();
    std::string file = style_file;
    if (file.empty()) {
        if (const char* env = std::getenv("XPPKIT_STYLE")) file = env;
    }
    if (!file.empty()) style.apply_json(read_file(file), &warnings);
    for (const auto& spec : overrides) style.apply_override(spec, &warnings);
    return style;
}

xpp::PeriodicBranchMode mode_from_name(const std::string& name) {
    if (name == "standard") return xpp::PeriodicBranchMode::Standard;
    if (name == "lower") return xpp::PeriodicBranchMode::Lower;
    if (name == "upper") return xpp::PeriodicBranchMode::Upper;
    if (name == "initial") return xpp::PeriodicBranchMode::Initial;
    if (name == "average") return xpp::PeriodicBranchMode::Average;
    throw CLI::ValidationError("--mode", "unknown mode '" + name + "'");
}

xpp::Env parse_bindings(const std::vector<std::string>& binds) {
    xpp::Env env;
    for (const auto& b : binds) {
        auto eq = b.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--bind", "'" + b + "' is not name=value");
        try {
            env[b.substr(0, eq)] = std::stod(b.substr(eq + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--bind", "'" + b + "' has a non-numeric value");
        }
    }
    return env;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"XPPAUT output-file toolkit"};
    app.require_subcommand(1);

    Inputs in;
    std::vector<std::string> vars, style_overrides, binds;
    std::vector<int> branches, points;
    std::string out_path, mode_name = "standard", style_file, nc_path, dat_path;
    std::string x_axis = "t", y_axis, expr_text, freeze_path, json_path, csv_dir;
    std::vector<std::string> pars;
    bool no_labels = false, swap_axes = false, projection = false;

    auto add_model_opts = [&](CLI::App* cmd, bool need_auto = true) {
        cmd->add_option("--ode", in.ode_path, "model .ode file")->required();
        if (need_auto)
            cmd->add_option("--auto", in.auto_path, "continuation .auto file")->required();
        if (need_auto)
            cmd->add_option("--bd", in.bd_name, "diagram name or 1-based ordinal "
                                                "(default: last)");
    };
    auto add_style_opts = [&](CLI::App* cmd) {
        cmd->add_option("--style", style_overrides, "style override key=value");
        cmd->add_option("--style-file", style_file, "JSON style document "
                                                    "(default: $XPPKIT_STYLE)");
    };

    auto* cmd_info = app.add_subcommand("info", "parse and summarize the repository");
    add_model_opts(cmd_info);

    auto* cmd_plot = app.add_subcommand("plot", "bifurcation-diagram SVG");
    add_model_opts(cmd_plot);
    cmd_plot->add_option("--vars", vars, "axis tokens (2 or 3)")->delimiter(',');
    cmd_plot->add_option("--mode", mode_name, "standard|lower|upper|initial|average");
    cmd_plot->add_option("--branches", branches, "1-based branch indices to keep")
        ->delimiter(',');
    cmd_plot->add_option("--points", points, "1-based labeled-point indices")->delimiter(',');
    cmd_plot->add_flag("--no-labels", no_labels, "suppress labeled-point overlay");
    add_style_opts(cmd_plot);
    cmd_plot->add_option("--out", out_path, "output SVG path")->required();

    auto* cmd_eig = app.add_subcommand("eig", "eigenvalue/Floquet SVG");
    add_model_opts(cmd_eig);
    cmd_eig->add_option("--vars", vars, "axis tokens incl. EigR/EigI")->delimiter(',');
    cmd_eig->add_option("--branches", branches, "1-based branch indices to keep")
        ->delimiter(',');
    add_style_opts(cmd_eig);
    cmd_eig->add_option("--out", out_path, "output SVG path")->required();

    auto* cmd_nc = app.add_subcommand("nullclines", "nullcline SVG");
    cmd_nc->add_option("--nc", nc_path, "nullcline [text]_x_y.dat file")->required();
    cmd_nc->add_flag("--swap", swap_axes, "swap the variable axes");
    add_style_opts(cmd_nc);
    cmd_nc->add_option("--out", out_path, "output SVG path")->required();

    auto* cmd_sim = app.add_subcommand("sim", "simulation time-series SVG");
    add_model_opts(cmd_sim, /*need_auto=*/false);
    cmd_sim->add_option("--dat", dat_path, "simulation .dat file")->required();
    cmd_sim->add_option("--x", x_axis, "x column (default t)");
    cmd_sim->add_option("--y", y_axis, "y column")->required();
    add_style_opts(cmd_sim);
    cmd_sim->add_option("--out", out_path, "output SVG path")->required();

    auto* cmd_avg = app.add_subcommand("avg", "average an integrand over every orbit");
    add_model_opts(cmd_avg);
    cmd_avg->add_option("--expr", expr_text, "integrand expression")->required();
    cmd_avg->add_option("--bind", binds, "extra bindings name=value");
    cmd_avg->add_option("--out", out_path, "optional CSV output path");

    auto* cmd_manifold = app.add_subcommand("manifold", "trajectory-family surface");
    add_model_opts(cmd_manifold);
    cmd_manifold->add_option("--vars", vars, "dynamical variables")->delimiter(',')
        ->required();
    cmd_manifold->add_option("--pars", pars, "hot parameters")->delimiter(',');
    cmd_manifold->add_flag("--projection", projection, "terminal values only");
    cmd_manifold->add_option("--out", out_path,
                             "output path (.json, or CSV directory)")->required();

    auto* cmd_export = app.add_subcommand("export", "freeze/JSON/CSV export");
    add_model_opts(cmd_export);
    cmd_export->add_option("--vars", vars, "freeze axis pair x,y")->delimiter(',');
    cmd_export->add_option("--freeze", freeze_path, "freeze .dat output path");
    cmd_export->add_option("--json", json_path, "JSON dump of the full repository");
    cmd_export->add_option("--csv", csv_dir, "directory for per-branch CSV files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    xpp::Warnings warnings;
    try {
        if (cmd_info->parsed()) {
            in.load(warnings);
            std::cout << in.repo.report;
        } else if (cmd_plot->parsed()) {
            in.load(warnings);
            const auto& bd = in.diagram();
            auto style = make_style(style_overrides, style_file, warnings);
            xpp::Figure fig(style);
            fig.add_diagram(in.model, bd, vars, mode_from_name(mode_name), branches,
                            &warnings);
            if (!no_labels)
                fig.add_labeled_points(in.model, bd, vars, branches, points, &warnings);
            write_file(out_path, fig.render());
        } else if (cmd_eig->parsed()) {
            in.load(warnings);
            auto style = make_style(style_overrides, style_file, warnings);
            write_file(out_path,
                       xpp::emit_eig_plot(in.model, in.diagram(), vars, style, branches,
                                          &warnings));
        } else if (cmd_nc->parsed()) {
            auto nc = xpp::parse_nullclines(nc_path);
            auto style = make_style(style_overrides, style_file, warnings);
            xpp::AxisSpec axes;
            if (swap_axes) axes = {nc.y_var, nc.x_var};
            write_file(out_path, xpp::emit_nullclines_plot(nc, axes, style));
        } else if (cmd_sim->parsed()) {
            in.load(warnings, /*need_auto=*/false);
            auto table = xpp::parse_data(in.model, read_file(dat_path));
            const auto* x = table.column(x_axis);
            const auto* y = table.column(y_axis);
            if (!x) throw xpp::Error(xpp::ErrorKind::UnknownAxisName, "'" + x_axis + "'");
            if (!y) throw xpp::Error(xpp::ErrorKind::UnknownAxisName, "'" + y_axis + "'");
            auto style = make_style(style_overrides, style_file, warnings);
            xpp::Figure fig(style);
            fig.add_series(*x, *y, style.branch.at(xpp::BranchClass::UEQ),
                           x_axis + "_" + y_axis);
            write_file(out_path, fig.render());
        } else if (cmd_avg->parsed()) {
            in.load(warnings);
            auto integrand = xpp::Expression::parse(expr_text);
            auto trajectories = xpp::get_trj(in.diagram());
            const auto& bd = in.diagram();
            std::string param = bd.params[0];
            auto result = xpp::find_zero_average(trajectories, param, integrand,
                                                 parse_bindings(binds), &warnings);
            std::string csv = param + ",J\n";
            for (std::size_t i = 0; i < result.c.size(); ++i) {
                std::ostringstream row;
                row.precision(15);
                row << result.c[i] << "," << result.J[i] << "\n";
                csv += row.str();
            }
            if (!out_path.empty()) write_file(out_path, csv);
            std::cout << "nTRJ: " << trajectories.size() << "\n"
                      << "BZ: " << result.label << "\n";
        } else if (cmd_manifold->parsed()) {
            in.load(warnings);
            auto trajectories = xpp::get_trj(in.diagram());
            if (projection) {
                auto curves = xpp::slow_manifold_projection(trajectories, vars);
                write_file(out_path, xpp::dump_json(curves));
            } else {
                auto surface = xpp::build_manifold(trajectories, vars, pars);
                if (out_path.size() > 5 && out_path.ends_with(".json")) {
                    write_file(out_path, xpp::dump_json(surface));
                } else {
                    std::filesystem::create_directories(out_path);
                    for (const auto& [name, cols] : surface.fields)
                        write_file(out_path + "/" + name + ".csv",
                                   xpp::csv_of_surface_field(name, cols));
                }
            }
        } else if (cmd_export->parsed()) {
            if (freeze_path.empty() && json_path.empty() && csv_dir.empty())
                throw xpp::Error(xpp::ErrorKind::UnsupportedTarget,
                                 "choose at least one of --freeze/--json/--csv");
            in.load(warnings);
            const auto& bd = in.diagram();
            if (!freeze_path.empty()) {
                std::optional<std::pair<std::string, std::string>> pair;
                if (vars.size() == 2) pair = {vars[0], vars[1]};
                write_file(freeze_path, xpp::write_points(in.model, bd, pair));
            }
            if (!json_path.empty()) write_file(json_path, xpp::dump_json(in.repo));
            if (!csv_dir.empty()) {
                std::filesystem::create_directories(csv_dir);
                auto dyn = in.model.dynamical_names();
                for (const auto& branch : bd.branches)
                    write_file(csv_dir + "/" + bd.name + "_" + branch.name + ".csv",
                               xpp::csv_of_branch(branch, bd.hot, dyn));
            }
        }
    } catch (const xpp::Error& e) {
        print_warnings(warnings);
        std::cerr << app.get_subcommands().front()->get_name() << ": error: " << e.what()
                  << "\n";
        return exit_code_of(e.kind());
    } catch (const std::exception& e) {
        print_warnings(warnings);
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
    }
    print_warnings(warnings);
    return 0;
}
