#include "bounce/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace bounce {

namespace {

// Proper crossing test for open segments (shared endpoints do not count).
bool segments_cross(const Segment& s, const Segment& t) {
    const double d1 = cross(s.b - s.a, t.a - s.a);
    const double d2 = cross(s.b - s.a, t.b - s.a);
    const double d3 = cross(t.b - t.a, s.a - t.a);
    const double d4 = cross(t.b - t.a, s.b - t.a);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

double point_segment_distance(Point2 p, const Segment& s) {
    const Point2 d = s.b - s.a;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return dist(p, s.a);
    const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
    return dist(p, s.a + t * d);
}

Isometry2 compose(const Isometry2& f, const Isometry2& g) {
    Isometry2 r;
    r.m = {f.m[0] * g.m[0] + f.m[1] * g.m[2], f.m[0] * g.m[1] + f.m[1] * g.m[3],
           f.m[2] * g.m[0] + f.m[3] * g.m[2], f.m[2] * g.m[1] + f.m[3] * g.m[3]};
    r.t = f.apply(g.t);
    return r;
}

Isometry2 inverse(const Isometry2& iso) {
    const double d = iso.det();
    Isometry2 r;
    r.m = {iso.m[3] / d, -iso.m[1] / d, -iso.m[2] / d, iso.m[0] / d};
    r.t = {-(r.m[0] * iso.t.x + r.m[1] * iso.t.y),
           -(r.m[2] * iso.t.x + r.m[3] * iso.t.y)};
    return r;
}

Isometry2 reflect_across_segment(const Segment& seg) {
    const Point2 d = seg.b - seg.a;
    const double len = norm(d);
    if (len < eps_geom) {
        throw std::invalid_argument("reflect_across_segment: zero-length segment");
    }
    const double c = d.x / len, s = d.y / len;
    // Reflection across a line through the origin with direction (c, s),
    // conjugated by translation to seg.a.
    Isometry2 r;
    r.m = {c * c - s * s, 2 * c * s, 2 * c * s, s * s - c * c};
    const Point2 ma = {r.m[0] * seg.a.x + r.m[1] * seg.a.y,
                       r.m[2] * seg.a.x + r.m[3] * seg.a.y};
    r.t = seg.a - ma;
    return r;
}

std::size_t LabeledPolygon::edge_index(const EdgeLabel& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return i;
    }
    throw std::invalid_argument("unknown edge label: " + label);
}

double signed_area(const std::vector<Point2>& vertices) {
    double a = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        a += cross(vertices[i], vertices[(i + 1) % n]);
    }
    return 0.5 * a;
}

LabeledPolygon make_polygon(std::vector<Point2> vertices,
                            std::vector<EdgeLabel> labels) {
    const std::size_t n = vertices.size();
    if (labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back("E" + std::to_string(i + 1));
        }
    }
    if (labels.size() != n) {
        throw std::invalid_argument("label count must equal vertex count");
    }
    if (n >= 3 && signed_area(vertices) < 0.0) {
        // Clockwise input: reverse vertices and re-index labels so that
        // labels still name the same geometric edges.
        std::reverse(vertices.begin(), vertices.end());
        std::vector<EdgeLabel> relabeled(n);
        for (std::size_t j = 0; j < n; ++j) {
            relabeled[j] = labels[(2 * n - 2 - j) % n];
        }
        labels = std::move(relabeled);
    }
    LabeledPolygon poly{std::move(vertices), std::move(labels)};
    const ValidationReport report = validate(poly);
    if (!report.valid) {
        std::string msg = "invalid polygon:";
        for (const auto& issue : report.issues) msg += " " + issue + ";";
        throw std::invalid_argument(msg);
    }
    return poly;
}

ValidationReport validate(const LabeledPolygon& poly) {
    ValidationReport report;
    auto fail = [&](std::string msg) {
        report.valid = false;
        report.issues.push_back(std::move(msg));
    };

    const std::size_t n = poly.vertices.size();
    if (n < 3) {
        fail("fewer than 3 vertices");
        return report;
    }
    if (poly.labels.size() != n) {
        fail("label count differs from vertex count");
        return report;
    }
    for (const Point2& v : poly.vertices) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
            fail("non-finite vertex coordinate");
            return report;
        }
    }

    {
        std::vector<EdgeLabel> sorted = poly.labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            fail("duplicate edge label");
        }
    }

    double scale = 0.0;
    for (const Point2& v : poly.vertices) scale = std::max(scale, norm(v));
    const double eps_len = std::max(scale, 1.0) * eps_geom;

    for (std::size_t i = 0; i < n; ++i) {
        if (dist(poly.vertices[i], poly.vertices[(i + 1) % n]) < eps_len) {
            fail("zero-length edge at vertex " + std::to_string(i));
        }
    }
    if (!report.valid) return report;

    for (std::size_t i = 0; i < n; ++i) {
        const Point2 prev = poly.vertices[(i + n - 1) % n];
        const Point2 cur = poly.vertices[i];
        const Point2 next = poly.vertices[(i + 1) % n];
        const Point2 u = cur - prev, v = next - cur;
        if (std::abs(cross(u, v)) < eps_len * std::max(norm(u), norm(v)) &&
            dot(u, v) > 0.0) {
            fail("straight angle at vertex " + std::to_string(i));
        }
    }

    if (signed_area(poly.vertices) <= 0.0) {
        fail("vertices are not counterclockwise");
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // Skip edges sharing a vertex.
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_cross(poly.edge(i), poly.edge(j))) {
                fail("self-intersection between edges " + std::to_string(i) +
                     " and " + std::to_string(j));
            }
        }
    }
    return report;
}

std::vector<double> interior_angles(const LabeledPolygon& poly) {
    const ValidationReport report = validate(poly);
    if (!report.valid) throw std::invalid_argument("interior_angles: invalid polygon");
    const std::size_t n = poly.vertices.size();
    std::vector<double> angles(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 prev = poly.vertices[(i + n - 1) % n];
        const Point2 cur = poly.vertices[i];
        const Point2 next = poly.vertices[(i + 1) % n];
        const Point2 u = cur - prev, v = next - cur;
        // Exterior turn in (-pi, pi); interior angle = pi - turn for CCW order.
        const double turn = std::atan2(cross(u, v), dot(u, v));
        angles[i] = std::numbers::pi - turn;
    }
    return angles;
}

bool is_strictly_convex(const LabeledPolygon& poly) {
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 prev = poly.vertices[(i + n - 1) % n];
        const Point2 cur = poly.vertices[i];
        const Point2 next = poly.vertices[(i + 1) % n];
        if (cross(cur - prev, next - cur) <= 0.0) return false;
    }
    return true;
}

double diameter(const LabeledPolygon& poly) {
    double d = 0.0;
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < poly.vertices.size(); ++j) {
            d = std::max(d, dist(poly.vertices[i], poly.vertices[j]));
        }
    }
    return d;
}

LabeledPolygon normalize(const LabeledPolygon& poly) {
    const Point2 v0 = poly.vertices[0];
    const Point2 v1 = poly.vertices[1];
    const Point2 d = v1 - v0;
    const double len2 = dot(d, d);
    // Similarity z -> (z - v0) / (v1 - v0) in complex form.
    const double cr = d.x / len2, ci = -d.y / len2;
    std::vector<Point2> mapped(poly.vertices.size());
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        const Point2 w = poly.vertices[i] - v0;
        mapped[i] = {w.x * cr - w.y * ci, w.x * ci + w.y * cr};
    }
    mapped[0] = {0.0, 0.0};
    mapped[1] = {1.0, 0.0};
    // Counterclockwise order is canonical (mirror images are reversed at
    // construction), so the similarity is orientation-preserving and the
    // third vertex of a convex table lands in the upper half plane.
    return LabeledPolygon{std::move(mapped), poly.labels};
}

bool point_in_polygon(const LabeledPolygon& poly, Point2 p) {
    bool inside = false;
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2 a = poly.vertices[i], b = poly.vertices[j];
        if ((a.y > p.y) != (b.y > p.y) &&
            p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) {
            inside = !inside;
        }
    }
    return inside;
}

}  // namespace bounce
