#ifndef XPPKIT_STYLE_HPP
#define XPPKIT_STYLE_HPP

#include <map>
#include <string>
#include <vector>

#include "xppkit/autorepo.hpp"
#include "xppkit/errors.hpp"

namespace xpp {

struct Rgb {
    double r = 0, g = 0, b = 0; // components in [0,1]
    std::string hex() const;
    bool operator==(const Rgb&) const = default;
};

struct LineStyle {
    Rgb color;
    bool dashed = false;
    double width = 1.2;
    bool operator==(const LineStyle&) const = default;
};

enum class MarkerShape { Square, Circle };

struct MarkerStyle {
    Rgb color;
    MarkerShape shape = MarkerShape::Circle;
    double size = 3.0;
    bool operator==(const MarkerStyle&) const = default;
};

/// Plot appearance. Defaults follow the standard legend: stable/unstable EQ
/// red/black, stable/unstable LC green/blue, HB magenta squares, SNPO orange
/// circles, SN cyan circles. PD/TR/BP/UZ/BVP colors are artifact defaults.
struct PlotStyle {
    std::map<BranchClass, LineStyle> branch;
    std::map<PointTag, MarkerStyle> marker;
    LineStyle nullcline_x; // nullcline of the x-axis variable
    LineStyle nullcline_y;

    double width = 6, height = 6;
    std::string units = "cm";
    std::string font_name = "Times New Roman";
    double font_size = 9;
    std::string grid_style = "none";
    double grid_alpha = 0;
    std::string resolution = "-r600"; // ignored for vector output, kept for
                                      // style-file compatibility

    static PlotStyle defaults();

    /// Applies a `key=value` override (e.g. "SEQ=#00ff00", "FontSize=11",
    /// "width=8"). Unknown keys warn and are ignored.
    void apply_override(const std::string& spec, Warnings* warnings = nullptr);

    /// Patches from a JSON style document (same keys as apply_override).
    void apply_json(const std::string& json_text, Warnings* warnings = nullptr);
};

} // namespace xpp

#endif
