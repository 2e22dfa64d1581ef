#include "xppkit/plots.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "xppkit/svg.hpp"

namespace xpp {

namespace {

enum class Extremum { Initial, Lower, Upper, Average };

Extremum extremum_of(PeriodicBranchMode mode, bool upper_pass) {
    switch (mode) {
        case PeriodicBranchMode::Standard: return upper_pass ? Extremum::Upper : Extremum::Lower;
        case PeriodicBranchMode::Lower: return Extremum::Lower;
        case PeriodicBranchMode::Upper: return Extremum::Upper;
        case PeriodicBranchMode::Initial: return Extremum::Initial;
        case PeriodicBranchMode::Average: return Extremum::Average;
    }
    return Extremum::Initial;
}

struct AxisResolver {
    const Model& model;
    const BifurcationDiagram& bd;
    std::vector<std::string> dynamical;

    AxisResolver(const Model& m, const BifurcationDiagram& d)
        : model(m), bd(d), dynamical(m.dynamical_names()) {}

    int hot_index(const std::string& token) const {
        for (std::size_t i = 0; i < bd.hot.size(); ++i)
            if (bd.hot[i] == token) return static_cast<int>(i);
        return -1;
    }
    int dyn_index(const std::string& token) const {
        for (std::size_t i = 0; i < dynamical.size(); ++i)
            if (dynamical[i] == token) return static_cast<int>(i);
        return -1;
    }

    void validate(const std::string& token, bool allow_eig = false) const {
        if (token == "L2" || token == "T" || token == "F") return;
        if (allow_eig && (token == "EigR" || token == "EigI")) return;
        if (hot_index(token) >= 0 || dyn_index(token) >= 0) return;
        throw Error(ErrorKind::UnknownAxisName, "'" + token + "'");
    }

    // Scalar for one point; nullopt when the token needs a period the point
    // lacks.
    std::optional<double> value(const ContinuationPoint& p, const std::string& token,
                                Extremum ext) const {
        if (token == "L2") return p.l2;
        if (token == "T") return p.period ? std::optional<double>(*p.period) : std::nullopt;
        if (token == "F")
            return (p.period && *p.period != 0) ? std::optional<double>(1.0 / *p.period)
                                                : std::nullopt;
        if (int h = hot_index(token); h >= 0) return p.par_values[h];
        int d = dyn_index(token);
        if (d < 0) throw Error(ErrorKind::UnknownAxisName, "'" + token + "'");
        const auto& s = p.u[d];
        if (!p.is_periodic()) return s.initial;
        switch (ext) {
            case Extremum::Initial: return s.initial;
            case Extremum::Lower: return s.lower;
            case Extremum::Upper: return s.upper;
            case Extremum::Average: return s.average;
        }
        return s.initial;
    }

    AxisSpec default_axes() const {
        if (bd.is_two_parameter()) return {bd.params[0], bd.params[1]};
        return {bd.params[0], dynamical.front()};
    }
};

bool branch_selected(const std::vector<int>& filter, int index_1based) {
    if (filter.empty()) return true;
    return std::find(filter.begin(), filter.end(), index_1based) != filter.end();
}

double unit_scale(const std::string& units) {
    if (units == "cm" || units == "centimeters") return 40.0;
    if (units == "in" || units == "inches") return 96.0;
    return 1.0; // px
}

} // namespace

Figure::Figure(PlotStyle style) : style_(std::move(style)) {}

void Figure::push_polyline(std::vector<std::array<double, 3>> pts, const LineStyle& ls,
                           const std::string& cls) {
    if (pts.size() < 2) {
        if (pts.size() == 1) {
            // single point degenerates to a dot-sized marker
            MarkerStyle ms{ls.color, MarkerShape::Circle, ls.width};
            push_marker(pts[0], ms, cls);
        }
        return;
    }
    layers_.push_back({Layer::Polyline, std::move(pts), ls, {}, cls});
}

void Figure::push_marker(std::array<double, 3> p, const MarkerStyle& ms, const std::string& cls) {
    layers_.push_back({Layer::Marker, {p}, {}, ms, cls});
}

void Figure::add_diagram(const Model& model, const BifurcationDiagram& bd,
                         const AxisSpec& axes_in, PeriodicBranchMode mode,
                         const std::vector<int>& branch_filter, Warnings* warnings) {
    AxisResolver resolver(model, bd);
    AxisSpec axes = axes_in.empty() ? resolver.default_axes() : axes_in;
    if (axes.size() != 2 && axes.size() != 3)
        throw Error(ErrorKind::UnknownAxisName, "axis spec must have 2 or 3 entries");
    for (const auto& token : axes) resolver.validate(token);
    if (axes.size() == 3) dim_ = 3;
    if (axis_names_.empty()) axis_names_ = axes;

    bool has_dyn_axis = std::any_of(axes.begin(), axes.end(), [&](const std::string& t) {
        return resolver.dyn_index(t) >= 0;
    });

    int index = 0;
    for (const auto& branch : bd.branches) {
        ++index;
        if (!branch_selected(branch_filter, index)) continue;
        const LineStyle& ls = style_.branch.at(branch.cls);

        bool periodic = !branch.points.empty() && branch.points.front().is_periodic();
        int passes = (mode == PeriodicBranchMode::Standard && periodic && has_dyn_axis) ? 2 : 1;
        for (int pass = 0; pass < passes; ++pass) {
            Extremum ext = extremum_of(mode, pass == 1);
            std::vector<std::array<double, 3>> pts;
            bool skipped = false;
            for (const auto& p : branch.points) {
                std::array<double, 3> coords{0, 0, 0};
                bool ok = true;
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    auto v = resolver.value(p, axes[a], ext);
                    if (!v) {
                        ok = false;
                        break;
                    }
                    coords[a] = *v;
                }
                if (!ok) {
                    skipped = true;
                    break;
                }
                pts.push_back(coords);
            }
            if (skipped) {
                warn(warnings, "branch " + branch.name + " skipped: axis needs a period "
                                   + "its points do not carry");
                break;
            }
            std::string cls = bd.name + "." + branch.name;
            if (passes == 2) cls += pass == 0 ? ".lower" : ".upper";
            push_polyline(std::move(pts), ls, cls);
        }
    }
}

void Figure::add_labeled_points(const Model& model, const BifurcationDiagram& bd,
                                const AxisSpec& axes_in,
                                const std::vector<int>& branch_filter,
                                const std::vector<int>& point_filter, Warnings* warnings) {
    AxisResolver resolver(model, bd);
    AxisSpec axes = axes_in.empty() ? resolver.default_axes() : axes_in;
    for (const auto& token : axes) resolver.validate(token);
    if (axes.size() == 3) dim_ = 3;
    if (axis_names_.empty()) axis_names_ = axes;

    bool has_dyn_axis = std::any_of(axes.begin(), axes.end(), [&](const std::string& t) {
        return resolver.dyn_index(t) >= 0;
    });

    int index = 0;
    for (const auto& lp : bd.labeled_points) {
        ++index;
        bool selected;
        if (branch_filter.empty() && point_filter.empty()) {
            selected = true;
        } else {
            // union of branch- and point-index selections
            selected = std::find(branch_filter.begin(), branch_filter.end(), lp.branch_index)
                           != branch_filter.end()
                       || std::find(point_filter.begin(), point_filter.end(), index)
                              != point_filter.end();
        }
        if (!selected) continue;

        const MarkerStyle& ms = style_.marker.at(lp.tag);
        bool both = lp.point.is_periodic() && has_dyn_axis;
        for (int pass = 0; pass < (both ? 2 : 1); ++pass) {
            Extremum ext = both ? (pass ? Extremum::Upper : Extremum::Lower) : Extremum::Initial;
            std::array<double, 3> coords{0, 0, 0};
            bool ok = true;
            for (std::size_t a = 0; a < axes.size(); ++a) {
                auto v = resolver.value(lp.point, axes[a], ext);
                if (!v) {
                    ok = false;
                    break;
                }
                coords[a] = *v;
            }
            if (!ok) {
                warn(warnings, "labeled point " + lp.name + " skipped: no period");
                break;
            }
            push_marker(coords, ms, bd.name + "." + lp.name);
        }
    }
}

void Figure::add_eig(const Model& model, const BifurcationDiagram& bd, const AxisSpec& axes_in,
                     const std::vector<int>& branch_filter, Warnings* warnings) {
    AxisResolver resolver(model, bd);
    AxisSpec axes = axes_in;
    if (axes.empty()) axes = {bd.params[0], "EigR", "EigI"};
    if (axes.size() != 2 && axes.size() != 3)
        throw Error(ErrorKind::InvalidAxisCombo, "axis spec must have 2 or 3 entries");
    for (const auto& token : axes) resolver.validate(token, /*allow_eig=*/true);

    int eig_axes = 0, base_axes = 0;
    for (const auto& token : axes) {
        if (token == "EigR" || token == "EigI") ++eig_axes;
        else ++base_axes;
    }
    if (eig_axes == 0)
        throw Error(ErrorKind::InvalidAxisCombo, "need at least one of EigR/EigI");
    if (base_axes == 0 && !(axes.size() == 2 && eig_axes == 2))
        throw Error(ErrorKind::InvalidAxisCombo,
                    "need a continuation parameter or variable axis");
    if (axes.size() == 3) dim_ = 3;
    if (axis_names_.empty()) axis_names_ = axes;

    const std::size_t n = model.dynamical_count();
    auto eig = get_eig(bd, /*sorted=*/true);

    auto coord = [&](const ContinuationPoint& p, const std::vector<std::array<double, 2>>& e,
                     std::size_t k, const std::string& token) -> double {
        if (token == "EigR") return e[k][0];
        if (token == "EigI") return e[k][1];
        return resolver.value(p, token, Extremum::Initial).value_or(0.0);
    };

    // eigen loci, one polyline per eigen index per branch
    for (std::size_t b = 0; b < bd.branches.size(); ++b) {
        if (!branch_selected(branch_filter, static_cast<int>(b) + 1)) continue;
        const auto& branch = bd.branches[b];
        const LineStyle& ls = style_.branch.at(branch.cls);
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<std::array<double, 3>> pts;
            for (std::size_t i = 0; i < branch.points.size(); ++i) {
                std::array<double, 3> c{0, 0, 0};
                for (std::size_t a = 0; a < axes.size(); ++a)
                    c[a] = coord(branch.points[i], eig.per_branch[b][i], k, axes[a]);
                pts.push_back(c);
            }
            push_polyline(std::move(pts), ls,
                          bd.name + "." + branch.name + ".eig" + std::to_string(k + 1));
        }
    }

    // unit cylinder: bifurcations of EQs/POs live on the unit circle
    LineStyle silhouette{{0.6, 0.6, 0.6}, true, 0.8};
    auto base_range = [&]() -> std::optional<std::array<double, 2>> {
        std::optional<std::array<double, 2>> r;
        for (const auto& branch : bd.branches)
            for (const auto& p : branch.points) {
                auto v = resolver.value(p, axes[0], Extremum::Initial);
                if (!v) continue;
                if (!r) r = {*v, *v};
                (*r)[0] = std::min((*r)[0], *v);
                (*r)[1] = std::max((*r)[1], *v);
            }
        return r;
    };

    auto unit_circle_pts = [](int segments) {
        std::vector<std::array<double, 2>> pts;
        for (int i = 0; i <= segments; ++i) {
            double a = 2.0 * M_PI * i / segments;
            pts.push_back({std::cos(a), std::sin(a)});
        }
        return pts;
    };

    if (axes.size() == 2 && eig_axes == 2) {
        std::vector<std::array<double, 3>> pts;
        for (auto& c : unit_circle_pts(64)) pts.push_back({c[0], c[1], 0});
        push_polyline(std::move(pts), silhouette, "unit_circle");
    } else if (axes.size() == 2) {
        if (auto r = base_range()) {
            push_polyline({{(*r)[0], 1, 0}, {(*r)[1], 1, 0}}, silhouette, "unit_upper");
            push_polyline({{(*r)[0], -1, 0}, {(*r)[1], -1, 0}}, silhouette, "unit_lower");
        }
    } else if (eig_axes == 2) {
        // full cylinder along the base axis
        if (auto r = base_range()) {
            for (auto [re, im] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}) {
                std::vector<std::array<double, 3>> pts = {{(*r)[0], 0, 0}, {(*r)[1], 0, 0}};
                for (auto& p : pts) {
                    std::size_t a = 1;
                    for (std::size_t i = 1; i < 3; ++i) p[i] = 0;
                    for (std::size_t i = 0; i < axes.size(); ++i) {
                        if (axes[i] == "EigR") p[i] = re;
                        if (axes[i] == "EigI") p[i] = im;
                    }
                    (void)a;
                }
                pts[0][0] = (*r)[0];
                pts[1][0] = (*r)[1];
                push_polyline(std::move(pts), silhouette, "cylinder_edge");
            }
        }
    }

    // rings and markers at the bifurcations of visible branches; deleted
    // branches drop their labeled points too
    for (const auto& lp : bd.labeled_points) {
        if (!branch_selected(branch_filter, lp.branch_index)) continue;
        const MarkerStyle& ms = style_.marker.at(lp.tag);
        if (axes.size() == 3 && eig_axes == 2) {
            auto v = resolver.value(lp.point, axes[0], Extremum::Initial);
            if (v) {
                LineStyle ring{ms.color, false, 1.0};
                std::vector<std::array<double, 3>> pts;
                for (auto& c : unit_circle_pts(64)) {
                    std::array<double, 3> p{*v, 0, 0};
                    int ci = 0;
                    for (std::size_t i = 0; i < 3; ++i) {
                        if (axes[i] == "EigR") p[i] = c[0];
                        else if (axes[i] == "EigI") p[i] = c[1];
                        else ++ci;
                    }
                    (void)ci;
                    pts.push_back(p);
                }
                push_polyline(std::move(pts), ring, bd.name + "." + lp.name + ".ring");
            }
        }
        auto eigs = point_eigs_sorted(lp.point);
        for (std::size_t k = 0; k < eigs.size(); ++k) {
            std::array<double, 3> c{0, 0, 0};
            bool ok = true;
            for (std::size_t a = 0; a < axes.size(); ++a) {
                if (axes[a] == "EigR") c[a] = eigs[k][0];
                else if (axes[a] == "EigI") c[a] = eigs[k][1];
                else {
                    auto v = resolver.value(lp.point, axes[a], Extremum::Initial);
                    if (!v) { ok = false; break; }
                    c[a] = *v;
                }
            }
            if (ok) push_marker(c, ms, bd.name + "." + lp.name + ".eig" + std::to_string(k + 1));
        }
    }
}

std::vector<std::array<double, 2>> Figure::point_eigs_sorted(const ContinuationPoint& p) {
    std::vector<std::array<double, 2>> eig(p.eig_real.size());
    for (std::size_t k = 0; k < eig.size(); ++k) eig[k] = {p.eig_real[k], p.eig_imag[k]};
    std::sort(eig.begin(), eig.end(), [](const auto& a, const auto& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    });
    return eig;
}

void Figure::add_nullclines(const NullclinePair& nc, const AxisSpec& axes) {
    bool swap = false;
    if (!axes.empty()) {
        if (axes.size() != 2
            || !((axes[0] == nc.x_var && axes[1] == nc.y_var)
                 || (axes[0] == nc.y_var && axes[1] == nc.x_var)))
            throw Error(ErrorKind::AxisNotInPair,
                        "axes must be a permutation of {" + nc.x_var + ", " + nc.y_var + "}");
        swap = axes[0] == nc.y_var;
    }
    if (axis_names_.empty())
        axis_names_ = swap ? AxisSpec{nc.y_var, nc.x_var} : AxisSpec{nc.x_var, nc.y_var};

    auto add_family = [&](const std::vector<Polyline2>& segments, const LineStyle& ls,
                          const std::string& prefix) {
        int i = 0;
        for (const auto& seg : segments) {
            std::vector<std::array<double, 3>> pts;
            for (const auto& p : seg)
                pts.push_back(swap ? std::array<double, 3>{p[1], p[0], 0}
                                   : std::array<double, 3>{p[0], p[1], 0});
            push_polyline(std::move(pts), ls, prefix + std::to_string(++i));
        }
    };
    add_family(nc.nc_x, style_.nullcline_x, "nc_" + nc.x_var + "_");
    add_family(nc.nc_y, style_.nullcline_y, "nc_" + nc.y_var + "_");
}

void Figure::add_series(const std::vector<double>& x, const std::vector<double>& y,
                        const LineStyle& style, const std::string& cls) {
    std::vector<std::array<double, 3>> pts;
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
        pts.push_back({x[i], y[i], 0});
    push_polyline(std::move(pts), style, cls);
}

std::string Figure::render() const {
    double scale = unit_scale(style_.units);
    double width = style_.width * scale;
    double height = style_.height * scale;
    const double ml = 42, mr = 12, mt = 12, mb = 34;

    // data bounds over every layer
    std::array<std::array<double, 2>, 3> bounds;
    bool any = false;
    for (const auto& layer : layers_) {
        for (const auto& p : layer.pts) {
            if (!any) {
                for (int a = 0; a < 3; ++a) bounds[a] = {p[a], p[a]};
                any = true;
            } else {
                for (int a = 0; a < 3; ++a) {
                    bounds[a][0] = std::min(bounds[a][0], p[a]);
                    bounds[a][1] = std::max(bounds[a][1], p[a]);
                }
            }
        }
    }
    if (!any)
        for (int a = 0; a < 3; ++a) bounds[a] = {0, 1};
    for (int a = 0; a < 3; ++a) {
        if (bounds[a][0] == bounds[a][1]) {
            bounds[a][0] -= 1;
            bounds[a][1] += 1;
        }
    }

    // oblique projection for 3D: x' = xn + 0.35 yn, y' = zn + 0.35 yn on
    // bounds-normalized coordinates
    auto project = [&](const std::array<double, 3>& p) -> std::array<double, 2> {
        auto norm = [&](int a) {
            return (p[a] - bounds[a][0]) / (bounds[a][1] - bounds[a][0]);
        };
        if (dim_ == 2) return {norm(0), norm(1)};
        return {(norm(0) + 0.35 * norm(1)) / 1.35, (norm(2) + 0.35 * norm(1)) / 1.35};
    };
    auto to_screen = [&](const std::array<double, 3>& p) -> std::array<double, 2> {
        auto q = project(p);
        return {ml + q[0] * (width - ml - mr), height - mb - q[1] * (height - mt - mb)};
    };

    svg::Document doc(width, height);
    doc.rect(0, 0, width, height, "#ffffff", "background");
    // plot frame
    doc.line(ml, mt, ml, height - mb, "#000000", 0.8);
    doc.line(ml, height - mb, width - mr, height - mb, "#000000", 0.8);

    if (dim_ == 2) {
        doc.text(ml, height - mb + 14, svg::num(bounds[0][0]), style_.font_name,
                 style_.font_size);
        doc.text(width - mr, height - mb + 14, svg::num(bounds[0][1]), style_.font_name,
                 style_.font_size, "end");
        doc.text(ml - 4, height - mb, svg::num(bounds[1][0]), style_.font_name,
                 style_.font_size, "end");
        doc.text(ml - 4, mt + style_.font_size, svg::num(bounds[1][1]), style_.font_name,
                 style_.font_size, "end");
    }
    if (!axis_names_.empty()) {
        doc.text((ml + width - mr) / 2, height - mb + 28, axis_names_[0], style_.font_name,
                 style_.font_size, "middle");
        if (axis_names_.size() > 1)
            doc.text(12, (mt + height - mb) / 2, axis_names_[dim_ == 3 ? 2 : 1],
                     style_.font_name, style_.font_size, "middle");
    }

    for (const auto& layer : layers_) {
        if (layer.kind == Layer::Polyline) {
            std::vector<std::array<double, 2>> pts;
            pts.reserve(layer.pts.size());
            for (const auto& p : layer.pts) pts.push_back(to_screen(p));
            doc.polyline(pts, layer.line.color.hex(), layer.line.width, layer.line.dashed,
                         layer.cls);
        } else {
            auto c = to_screen(layer.pts[0]);
            if (layer.marker.shape == MarkerShape::Square)
                doc.rect(c[0] - layer.marker.size, c[1] - layer.marker.size,
                         2 * layer.marker.size, 2 * layer.marker.size,
                         layer.marker.color.hex(), layer.cls);
            else
                doc.circle(c[0], c[1], layer.marker.size, layer.marker.color.hex(), layer.cls);
        }
    }
    return doc.str();
}

std::string emit_diagram_plot(const Model& model, const BifurcationDiagram& bd,
                              const AxisSpec& axes, PeriodicBranchMode mode,
                              const PlotStyle& style, const std::vector<int>& branch_filter,
                              Warnings* warnings) {
    Figure fig(style);
    fig.add_diagram(model, bd, axes, mode, branch_filter, warnings);
    return fig.render();
}

std::string emit_labeled_points_plot(const Model& model, const BifurcationDiagram& bd,
                                     const AxisSpec& axes, const PlotStyle& style,
                                     const std::vector<int>& branch_filter,
                                     const std::vector<int>& point_filter,
                                     Warnings* warnings) {
    Figure fig(style);
    fig.add_labeled_points(model, bd, axes, branch_filter, point_filter, warnings);
    return fig.render();
}

std::string emit_eig_plot(const Model& model, const BifurcationDiagram& bd,
                          const AxisSpec& axes, const PlotStyle& style,
                          const std::vector<int>& branch_filter, Warnings* warnings) {
    Figure fig(style);
    fig.add_eig(model, bd, axes, branch_filter, warnings);
    return fig.render();
}

std::string emit_nullclines_plot(const NullclinePair& nc, const AxisSpec& axes,
                                 const PlotStyle& style) {
    Figure fig(style);
    fig.add_nullclines(nc, axes);
    return fig.render();
}

} // namespace xpp
