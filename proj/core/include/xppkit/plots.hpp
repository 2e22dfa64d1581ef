#ifndef XPPKIT_PLOTS_HPP
#define XPPKIT_PLOTS_HPP

#include <array>
#include <string>
#include <vector>

#include "xppkit/analysis.hpp"
#include "xppkit/autorepo.hpp"
#include "xppkit/style.hpp"
#include "xppkit/tables.hpp"

namespace xpp {

/// Axis tokens: a hot-parameter name, a dynamical-variable name, or one of
/// the special tokens L2 | T | F (frequency = 1/T). Eigen plots additionally
/// accept EigR | EigI.
using AxisSpec = std::vector<std::string>;

/// How periodic/BVP branches are drawn: Standard draws both the lower and
/// the upper extremum curve, the others a single curve.
enum class PeriodicBranchMode { Standard, Lower, Upper, Initial, Average };

/// Deterministic SVG figure: layers accumulate in call order, bounds are
/// computed over all layers at render time. 3D data is drawn with a fixed
/// oblique projection (see docs/formats.md).
class Figure {
public:
    explicit Figure(PlotStyle style = PlotStyle::defaults());

    void add_diagram(const Model& model, const BifurcationDiagram& bd,
                     const AxisSpec& axes = {},
                     PeriodicBranchMode mode = PeriodicBranchMode::Standard,
                     const std::vector<int>& branch_filter = {},
                     Warnings* warnings = nullptr);

    // Filters union; both empty selects every labeled point.
    void add_labeled_points(const Model& model, const BifurcationDiagram& bd,
                            const AxisSpec& axes = {},
                            const std::vector<int>& branch_filter = {},
                            const std::vector<int>& point_filter = {},
                            Warnings* warnings = nullptr);

    void add_eig(const Model& model, const BifurcationDiagram& bd,
                 const AxisSpec& axes = {},
                 const std::vector<int>& branch_filter = {},
                 Warnings* warnings = nullptr);

    void add_nullclines(const NullclinePair& nc, const AxisSpec& axes = {});

    void add_series(const std::vector<double>& x, const std::vector<double>& y,
                    const LineStyle& style, const std::string& cls = "");

    std::string render() const;

private:
    struct Layer {
        enum Kind { Polyline, Marker } kind;
        std::vector<std::array<double, 3>> pts;
        LineStyle line;
        MarkerStyle marker;
        std::string cls;
    };
    void push_polyline(std::vector<std::array<double, 3>> pts, const LineStyle& ls,
                       const std::string& cls);
    void push_marker(std::array<double, 3> p, const MarkerStyle& ms, const std::string& cls);
    static std::vector<std::array<double, 2>> point_eigs_sorted(const ContinuationPoint& p);

    PlotStyle style_;
    std::vector<Layer> layers_;
    AxisSpec axis_names_; // first-added layer group fixes the axis labels
    int dim_ = 2;
};

std::string emit_diagram_plot(const Model& model, const BifurcationDiagram& bd,
                              const AxisSpec& axes = {},
                              PeriodicBranchMode mode = PeriodicBranchMode::Standard,
                              const PlotStyle& style = PlotStyle::defaults(),
                              const std::vector<int>& branch_filter = {},
                              Warnings* warnings = nullptr);

std::string emit_labeled_points_plot(const Model& model, const BifurcationDiagram& bd,
                                     const AxisSpec& axes = {},
                                     const PlotStyle& style = PlotStyle::defaults(),
                                     const std::vector<int>& branch_filter = {},
                                     const std::vector<int>& point_filter = {},
                                     Warnings* warnings = nullptr);

std::string emit_eig_plot(const Model& model, const BifurcationDiagram& bd,
                          const AxisSpec& axes = {},
                          const PlotStyle& style = PlotStyle::defaults(),
                          const std::vector<int>& branch_filter = {},
                          Warnings* warnings = nullptr);

std::string emit_nullclines_plot(const NullclinePair& nc, const AxisSpec& axes = {},
                                 const PlotStyle& style = PlotStyle::defaults());

} // namespace xpp

#endif
