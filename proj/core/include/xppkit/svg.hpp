#ifndef XPPKIT_SVG_HPP
#define XPPKIT_SVG_HPP

#include <array>
#include <string>
#include <vector>

namespace xpp::svg {

/// Canonical float formatting for SVG output: 6 significant digits,
/// so identical inputs yield byte-identical documents.
std::string num(double v);

/// Minimal SVG 1.1 writer. Elements appear in insertion order; attributes
/// in fixed order.
class Document {
public:
    Document(double width, double height);

    void comment(const std::string& text);
    void line(double x1, double y1, double x2, double y2,
              const std::string& stroke, double stroke_width = 1.0, bool dashed = false);
    void polyline(const std::vector<std::array<double, 2>>& pts,
                  const std::string& stroke, double stroke_width = 1.0,
                  bool dashed = false, const std::string& cls = "");
    void circle(double cx, double cy, double r, const std::string& fill,
                const std::string& cls = "");
    void rect(double x, double y, double w, double h, const std::string& fill,
              const std::string& cls = "");
    void text(double x, double y, const std::string& content,
              const std::string& font, double size,
              const std::string& anchor = "start");

    std::string str() const;

private:
    double width_, height_;
    std::vector<std::string> elements_;
};

} // namespace xpp::svg

#endif
