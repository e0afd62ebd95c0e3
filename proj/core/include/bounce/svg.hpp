#pragma once

#include <string>
#include <vector>

#include "bounce/geometry.hpp"

namespace bounce {

// Minimal deterministic SVG writer.  Fixed 1000x1000 canvas; world
// coordinates are fitted once with a 5% margin and the y-axis flipped.
class SvgCanvas {
  public:
    // bounds: world-coordinate points the drawing must contain.
    explicit SvgCanvas(const std::vector<Point2>& bounds);

    void polygon(const std::vector<Point2>& pts, const std::string& stroke,
                 const std::string& fill, double stroke_width = 2.0,
                 double fill_opacity = 1.0);
    void polyline(const std::vector<Point2>& pts, const std::string& stroke,
                  double stroke_width = 2.0, bool dashed = false);
    void line(Point2 a, Point2 b, const std::string& stroke,
              double stroke_width = 2.0, bool dashed = false);
    void circle(Point2 center, double radius_px, const std::string& fill);
    void text(Point2 at, const std::string& s, double size_px = 24.0);

    std::string str() const;
    void save(const std::string& path) const;

  private:
    Point2 to_px(Point2 world) const;
    std::string body_;
    double scale_ = 1.0;
    Point2 world_min_{0.0, 0.0};
    Point2 offset_px_{0.0, 0.0};
};

}  // namespace bounce
