#include "xppkit/svg.hpp"

#include <cstdio>

namespace xpp::svg {

std::string num(double v) {
    if (v == 0) v = 0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

Document::Document(double width, double height) : width_(width), height_(height) {}

void Document::comment(const std::string& text) {
    elements_.push_back("<!-- " + escape(text) + " -->");
}

void Document::line(double x1, double y1, double x2, double y2, const std::string& stroke,
                    double stroke_width, bool dashed) {
    std::string e = "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2)
                    + "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\""
                    + num(stroke_width) + "\"";
    if (dashed) e += " stroke-dasharray=\"4 2\"";
    e += "/>";
    elements_.push_back(std::move(e));
}

void Document::polyline(const std::vector<std::array<double, 2>>& pts,
                        const std::string& stroke, double stroke_width, bool dashed,
                        const std::string& cls) {
    std::string e = "<polyline";
    if (!cls.empty()) e += " class=\"" + escape(cls) + "\"";
    e += " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) e += " ";
        e += num(pts[i][0]) + "," + num(pts[i][1]);
    }
    e += "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + num(stroke_width)
         + "\"";
    if (dashed) e += " stroke-dasharray=\"4 2\"";
    e += "/>";
    elements_.push_back(std::move(e));
}

void Document::circle(double cx, double cy, double r, const std::string& fill,
                      const std::string& cls) {
    std::string e = "<circle";
    if (!cls.empty()) e += " class=\"" + escape(cls) + "\"";
    e += " cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) + "\" fill=\"" + fill
         + "\"/>";
    elements_.push_back(std::move(e));
}

void Document::rect(double x, double y, double w, double h, const std::string& fill,
                    const std::string& cls) {
    std::string e = "<rect";
    if (!cls.empty()) e += " class=\"" + escape(cls) + "\"";
    e += " x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\""
         + num(h) + "\" fill=\"" + fill + "\"/>";
    elements_.push_back(std::move(e));
}

void Document::text(double x, double y, const std::string& content, const std::string& font,
                    double size, const std::string& anchor) {
    elements_.push_back("<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\""
                        + escape(font) + "\" font-size=\"" + num(size) + "\" text-anchor=\""
                        + anchor + "\">" + escape(content) + "</text>");
}

std::string Document::str() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width_)
           + "\" height=\"" + num(height_) + "\" viewBox=\"0 0 " + num(width_) + " "
           + num(height_) + "\">\n";
    for (const auto& e : elements_) {
        out += e;
        out += "\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace xpp::svg
