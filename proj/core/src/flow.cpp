#include "bounce/flow.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bounce {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
    theta = std::fmod(theta, two_pi);
    return theta < 0.0 ? theta + two_pi : theta;
}

struct RayHit {
    bool found = false;
    double t = 0.0;
    std::size_t edge = 0;
    Point2 point;
};

// First transversal intersection of the ray p0 + t*dir (t > t_min) with the
// image of the polygon boundary under g, skipping the given edge index.
RayHit first_hit(const LabeledPolygon& poly, const Isometry2& g, Point2 p0,
                 Point2 dir, double t_min, std::size_t skip_edge) {
    RayHit best;
    const std::size_t n = poly.size();
    for (std::size_t e = 0; e < n; ++e) {
        if (e == skip_edge) continue;
        const Segment seg{g.apply(poly.edge(e).a), g.apply(poly.edge(e).b)};
        const Point2 ab = seg.b - seg.a;
        const double denom = cross(dir, ab);
        if (std::abs(denom) < 1e-14 * norm(ab)) continue;  // parallel edge
        const Point2 w = seg.a - p0;
        const double t = cross(w, ab) / denom;
        const double s = cross(w, dir) / denom;
        if (t <= t_min || s < -1e-9 || s > 1.0 + 1e-9) continue;
        if (!best.found || t < best.t) {
            best = {true, t, e, p0 + t * dir};
        }
    }
    return best;
}

}  // namespace

BounceWord::BounceWord(std::vector<EdgeLabel> ls) : letters(std::move(ls)) {
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        if (letters[i] == letters[i + 1]) {
            throw std::invalid_argument("bounce word repeats letter: " + letters[i]);
        }
    }
    for (const EdgeLabel& l : letters) {
        if (l.empty()) throw std::invalid_argument("empty letter in bounce word");
    }
}

BounceWord BounceWord::parse(const std::string& text) {
    std::vector<EdgeLabel> letters;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) letters.push_back(item);
    return BounceWord(std::move(letters));
}

std::string BounceWord::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ",";
        out += letters[i];
    }
    return out;
}

double reflect_direction(double theta_in, const Segment& edge) {
    const Point2 ab = edge.b - edge.a;
    const double len = norm(ab);
    if (len < eps_geom) throw std::invalid_argument("degenerate edge");
    const Point2 e{ab.x / len, ab.y / len};
    const Point2 d{std::cos(theta_in), std::sin(theta_in)};
    if (std::abs(cross(d, e)) < 1e-12) {
        throw std::invalid_argument("ray parallel to edge (tangent)");
    }
    const double de = dot(d, e);
    const Point2 r{2 * de * e.x - d.x, 2 * de * e.y - d.y};
    return wrap_angle(std::atan2(r.y, r.x));
}

StepEvent step(const LabeledPolygon& poly, const RayState& state) {
    const double diam = diameter(poly);
    const Point2 dir{std::cos(state.theta), std::sin(state.theta)};
    const RayHit hit = first_hit(poly, Isometry2{}, state.position, dir,
                                 1e-12 * std::max(diam, 1.0),
                                 static_cast<std::size_t>(-1));
    if (!hit.found) {
        throw std::runtime_error("step: ray leaves polygon without boundary hit");
    }
    const Segment seg = poly.edge(hit.edge);
    const double eps_vertex = eps_vertex_rel * diam;
    StepEvent ev;
    if (dist(hit.point, seg.a) < eps_vertex) {
        ev.singular = true;
        ev.vertex_index = hit.edge;
        return ev;
    }
    if (dist(hit.point, seg.b) < eps_vertex) {
        ev.singular = true;
        ev.vertex_index = (hit.edge + 1) % poly.size();
        return ev;
    }
    ev.edge_index = hit.edge;
    ev.impact = hit.point;
    return ev;
}

TraceResult trace(const LabeledPolygon& poly, Point2 p, double theta,
                  std::size_t n_bounces) {
    const double diam = diameter(poly);
    const double eps_vertex = eps_vertex_rel * diam;
    const double t_eps = 1e-12 * std::max(diam, 1.0);
    const Point2 dir{std::cos(theta), std::sin(theta)};

    TraceResult result;
    // Keep the trajectory a straight line in the plane and unfold the table
    // instead: g maps table coordinates to the current unfolded copy.
    Isometry2 g;
    Isometry2 g_inv;
    double t_cur = 0.0;
    std::size_t prev_edge = static_cast<std::size_t>(-1);
    std::vector<EdgeLabel> letters;

    for (std::size_t bounce = 0; bounce < n_bounces; ++bounce) {
        const RayHit hit = first_hit(poly, g, p, dir, t_cur + t_eps, prev_edge);
        if (!hit.found) {
            throw std::runtime_error("trace: ray leaves polygon without boundary hit");
        }
        const Segment seg{g.apply(poly.edge(hit.edge).a),
                          g.apply(poly.edge(hit.edge).b)};
        if (dist(hit.point, seg.a) < eps_vertex ||
            dist(hit.point, seg.b) < eps_vertex) {
            result.terminal = TraceResult::Terminal::singular;
            result.singular_vertex =
                dist(hit.point, seg.a) < dist(hit.point, seg.b)
                    ? hit.edge
                    : (hit.edge + 1) % poly.size();
            break;
        }
        letters.push_back(poly.labels[hit.edge]);
        result.impact_points.push_back(g_inv.apply(hit.point));
        g = compose(reflect_across_segment(seg), g);
        g_inv = inverse(g);
        prev_edge = hit.edge;
        t_cur = hit.t;
    }
    result.word = BounceWord(std::move(letters));
    return result;
}

}  // namespace bounce
