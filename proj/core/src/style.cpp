#include "xppkit/style.hpp"

#include <cmath>
#include <cstdio>
#include <optional>

#include <json.hpp>

#include "util.hpp"

namespace xpp {

std::string Rgb::hex() const {
    auto channel = [](double v) {
        if (v < 0) v = 0;
        if (v > 1) v = 1;
        return static_cast<int>(std::lround(v * 255.0));
    };
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", channel(r), channel(g), channel(b));
    return buf;
}

PlotStyle PlotStyle::defaults() {
    PlotStyle s;
    s.branch[BranchClass::SEQ] = {{1, 0, 0}, false, 1.2};        // red
    s.branch[BranchClass::UEQ] = {{0, 0, 0}, false, 1.2};        // black
    s.branch[BranchClass::SLC] = {{0, 1, 0}, false, 1.2};        // green
    s.branch[BranchClass::ULC] = {{0, 0, 1}, false, 1.2};        // blue
    s.branch[BranchClass::BVP] = {{0.5, 0, 0.5}, false, 1.2};    // artifact default
    s.branch[BranchClass::HB] = {{1, 0, 1}, false, 1.2};         // 2P bifurcation curves
    s.branch[BranchClass::SNPO] = {{1, 0.647059, 0}, false, 1.2};
    s.branch[BranchClass::SN] = {{0, 1, 1}, false, 1.2};
    s.branch[BranchClass::PD] = {{0.6, 0.3, 0}, false, 1.2};     // artifact default
    s.branch[BranchClass::TR] = {{0.5, 0.5, 0}, false, 1.2};     // artifact default
    s.branch[BranchClass::BP] = {{0.4, 0.4, 0.4}, false, 1.2};   // artifact default
    s.branch[BranchClass::UZ] = {{0, 0.5, 0.5}, false, 1.2};     // artifact default

    s.marker[PointTag::HB] = {{1, 0, 1}, MarkerShape::Square, 3};
    s.marker[PointTag::SNPO] = {{1, 0.647059, 0}, MarkerShape::Circle, 3};
    s.marker[PointTag::SN] = {{0, 1, 1}, MarkerShape::Circle, 3};
    s.marker[PointTag::PD] = {{0.6, 0.3, 0}, MarkerShape::Circle, 3};
    s.marker[PointTag::TR] = {{0.5, 0.5, 0}, MarkerShape::Circle, 3};
    s.marker[PointTag::EP] = {{0.3, 0.3, 0.3}, MarkerShape::Circle, 2};
    s.marker[PointTag::UZ] = {{0, 0.5, 0.5}, MarkerShape::Square, 3};

    s.nullcline_x = {{1, 0.647059, 0}, false, 1.2};      // orange
    s.nullcline_y = {{0.529412, 0.807843, 0.980392}, false, 1.2}; // light blue
    return s;
}

namespace {

std::optional<Rgb> parse_color(std::string_view text) {
    if (text.size() == 7 && text[0] == '#') {
        auto nibble = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            return -1;
        };
        int v[6];
        for (int i = 0; i < 6; ++i) {
            v[i] = nibble(text[i + 1]);
            if (v[i] < 0) return std::nullopt;
        }
        return Rgb{(v[0] * 16 + v[1]) / 255.0, (v[2] * 16 + v[3]) / 255.0,
                   (v[4] * 16 + v[5]) / 255.0};
    }
    // r,g,b triplet in [0,1]
    auto parts = detail::split_char(text, ',');
    if (parts.size() == 3) {
        Rgb c;
        auto r = detail::parse_number(detail::trim(parts[0]));
        auto g = detail::parse_number(detail::trim(parts[1]));
        auto b = detail::parse_number(detail::trim(parts[2]));
        if (r && g && b) return Rgb{*r, *g, *b};
    }
    return std::nullopt;
}

std::optional<BranchClass> branch_class_by_name(std::string_view name) {
    for (int i = 0; i < 12; ++i) {
        auto c = static_cast<BranchClass>(i);
        if (name == branch_class_name(c)) return c;
    }
    return std::nullopt;
}

std::optional<PointTag> point_tag_by_name(std::string_view name) {
    for (int i = 1; i <= 7; ++i) {
        auto t = static_cast<PointTag>(i);
        if (name == point_tag_name(t)) return t;
    }
    return std::nullopt;
}

} // namespace

void PlotStyle::apply_override(const std::string& spec, Warnings* warnings) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) {
        warn(warnings, "style override '" + spec + "' is not key=value; ignored");
        return;
    }
    std::string key(detail::trim(std::string_view(spec).substr(0, eq)));
    std::string value(detail::trim(std::string_view(spec).substr(eq + 1)));

    if (auto cls = branch_class_by_name(key)) {
        if (auto color = parse_color(value)) {
            branch[*cls].color = *color;
            if (auto tag = point_tag_by_name(key)) marker[*tag].color = *color;
            return;
        }
        warn(warnings, "bad color '" + value + "' for " + key + "; ignored");
        return;
    }
    if (key == "width" || key == "height" || key == "FontSize" || key == "gridAlpha") {
        auto v = detail::parse_number(value);
        if (!v) {
            warn(warnings, "bad numeric style value '" + value + "'; ignored");
            return;
        }
        if (key == "width") width = *v;
        else if (key == "height") height = *v;
        else if (key == "FontSize") font_size = *v;
        else grid_alpha = *v;
        return;
    }
    if (key == "units") { units = value; return; }
    if (key == "FontName") { font_name = value; return; }
    if (key == "gridLineStyle") { grid_style = value; return; }
    if (key == "format" || key == "resolution" || key == "extension") {
        warn(warnings, "style key '" + key + "' has no effect on vector output");
        return;
    }
    warn(warnings, "unknown style key '" + key + "'; ignored");
}

void PlotStyle::apply_json(const std::string& json_text, Warnings* warnings) {
    auto doc = nlohmann::json::parse(json_text);
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        std::string value = it.value().is_string() ? it.value().get<std::string>()
                                                   : it.value().dump();
        apply_override(it.key() + "=" + value, warnings);
    }
}

} // namespace xpp
