#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace bounce {

// Global geometric tolerance for incidence tests.
inline constexpr double eps_geom = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

struct Segment {
    Point2 a;
    Point2 b;
};

// Distance from point p to the closed segment s.
double point_segment_distance(Point2 p, const Segment& s);

// Orientation-preserving or -reversing affine isometry x -> M x + t.
struct Isometry2 {
    // Row-major 2x2 linear part.
    std::array<double, 4> m{1.0, 0.0, 0.0, 1.0};
    Point2 t{0.0, 0.0};

    Point2 apply(Point2 p) const {
        return {m[0] * p.x + m[1] * p.y + t.x, m[2] * p.x + m[3] * p.y + t.y};
    }
    double det() const { return m[0] * m[3] - m[1] * m[2]; }
};

Isometry2 compose(const Isometry2& f, const Isometry2& g);  // f after g
Isometry2 inverse(const Isometry2& iso);

// Involutive isometry fixing the line through the segment.
// Throws std::invalid_argument on a zero-length segment.
Isometry2 reflect_across_segment(const Segment& seg);

using EdgeLabel = std::string;

struct LabeledPolygon {
    std::vector<Point2> vertices;       // counterclockwise
    std::vector<EdgeLabel> labels;      // labels[i] names edge (v[i], v[i+1 mod n])

    std::size_t size() const { return vertices.size(); }
    Segment edge(std::size_t i) const {
        return {vertices[i], vertices[(i + 1) % vertices.size()]};
    }
    // Index of the edge with the given label; throws if unknown.
    std::size_t edge_index(const EdgeLabel& label) const;
};

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> issues;
};

// Build a polygon, defaulting labels to E1..En and reversing clockwise input
// (with label re-indexing).  Throws std::invalid_argument if validation fails.
LabeledPolygon make_polygon(std::vector<Point2> vertices,
                            std::vector<EdgeLabel> labels = {});

ValidationReport validate(const LabeledPolygon& poly);

// Interior angle at each vertex, in (0, 2*pi); reflex vertices exceed pi.
std::vector<double> interior_angles(const LabeledPolygon& poly);

bool is_strictly_convex(const LabeledPolygon& poly);

double diameter(const LabeledPolygon& poly);

// Orientation-preserving similarity sending vertex 0 to the origin and
// vertex 1 to (1,0); counterclockwise order puts the interior above.
LabeledPolygon normalize(const LabeledPolygon& poly);

// Signed area (positive for counterclockwise vertex order).
double signed_area(const std::vector<Point2>& vertices);

bool point_in_polygon(const LabeledPolygon& poly, Point2 p);

}  // namespace bounce
