#include "bounce/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bounce {

namespace {

constexpr double canvas = 1000.0;
constexpr double margin = 0.05 * canvas;

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << std::fixed << v;
    return out.str();
}

}  // namespace

SvgCanvas::SvgCanvas(const std::vector<Point2>& bounds) {
    Point2 lo{0.0, 0.0}, hi{1.0, 1.0};
    if (!bounds.empty()) {
        lo = hi = bounds[0];
        for (const Point2& p : bounds) {
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
        }
    }
    const double span = std::max({hi.x - lo.x, hi.y - lo.y, 1e-12});
    scale_ = (canvas - 2.0 * margin) / span;
    world_min_ = lo;
    // Center the drawing on the canvas.
    offset_px_ = {margin + 0.5 * ((canvas - 2 * margin) - scale_ * (hi.x - lo.x)),
                  margin + 0.5 * ((canvas - 2 * margin) - scale_ * (hi.y - lo.y))};
}

Point2 SvgCanvas::to_px(Point2 world) const {
    return {offset_px_.x + scale_ * (world.x - world_min_.x),
            canvas - (offset_px_.y + scale_ * (world.y - world_min_.y))};
}

void SvgCanvas::polygon(const std::vector<Point2>& pts, const std::string& stroke,
                        const std::string& fill, double stroke_width,
                        double fill_opacity) {
    std::ostringstream out;
    out << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point2 p = to_px(pts[i]);
        if (i) out << " ";
        out << fmt(p.x) << "," << fmt(p.y);
    }
    out << "\" stroke=\"" << stroke << "\" fill=\"" << fill
        << "\" fill-opacity=\"" << fmt(fill_opacity) << "\" stroke-width=\""
        << fmt(stroke_width) << "\"/>\n";
    body_ += out.str();
}

void SvgCanvas::polyline(const std::vector<Point2>& pts, const std::string& stroke,
                         double stroke_width, bool dashed) {
    std::ostringstream out;
    out << "<polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point2 p = to_px(pts[i]);
        if (i) out << " ";
        out << fmt(p.x) << "," << fmt(p.y);
    }
    out << "\" stroke=\"" << stroke << "\" fill=\"none\" stroke-width=\""
        << fmt(stroke_width) << "\"";
    if (dashed) out << " stroke-dasharray=\"8 6\"";
    out << "/>\n";
    body_ += out.str();
}

void SvgCanvas::line(Point2 a, Point2 b, const std::string& stroke,
                     double stroke_width, bool dashed) {
    polyline({a, b}, stroke, stroke_width, dashed);
}

void SvgCanvas::circle(Point2 center, double radius_px, const std::string& fill) {
    const Point2 p = to_px(center);
    std::ostringstream out;
    out << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\""
        << fmt(radius_px) << "\" fill=\"" << fill << "\"/>\n";
    body_ += out.str();
}

void SvgCanvas::text(Point2 at, const std::string& s, double size_px) {
    const Point2 p = to_px(at);
    std::ostringstream out;
    out << "<text x=\"" << fmt(p.x) << "\" y=\"" << fmt(p.y)
        << "\" font-size=\"" << fmt(size_px)
        << "\" font-family=\"monospace\">" << s << "</text>\n";
    body_ += out.str();
}

std::string SvgCanvas::str() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" "
           "height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
        << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n"
        << body_ << "</svg>\n";
    return out.str();
}

void SvgCanvas::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open SVG output: " + path);
    out << str();
}

}  // namespace bounce
