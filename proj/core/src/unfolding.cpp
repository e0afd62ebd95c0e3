#include "bounce/unfolding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace bounce {

namespace {

constexpr double slope_cap = 50.0;

// Halfplane ca*a + cb*b + c0 >= 0 in (slope, intercept) space.
struct Halfplane {
    double ca, cb, c0;
    double eval(const std::array<double, 2>& p) const {
        return ca * p[0] + cb * p[1] + c0;
    }
};

using Region = std::vector<std::array<double, 2>>;

Region clip(const Region& poly, const Halfplane& h) {
    Region out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& cur = poly[i];
        const auto& nxt = poly[(i + 1) % n];
        const double dc = h.eval(cur), dn = h.eval(nxt);
        if (dc >= 0.0) out.push_back(cur);
        if ((dc > 0.0 && dn < 0.0) || (dc < 0.0 && dn > 0.0)) {
            const double t = dc / (dc - dn);
            out.push_back({cur[0] + t * (nxt[0] - cur[0]),
                           cur[1] + t * (nxt[1] - cur[1])});
        }
    }
    return out;
}

double region_area(const Region& r) {
    double a = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const auto& p = r[i];
        const auto& q = r[(i + 1) % r.size()];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::abs(a);
}

std::array<double, 2> region_centroid(const Region& r) {
    // Vertex average is enough here: the region is convex and small.
    std::array<double, 2> c{0.0, 0.0};
    for (const auto& p : r) {
        c[0] += p[0];
        c[1] += p[1];
    }
    c[0] /= static_cast<double>(r.size());
    c[1] /= static_cast<double>(r.size());
    return c;
}

struct Frame {
    Point2 origin;
    Point2 u;  // direction of travel
    Point2 v;  // left of travel
    double angle = 0.0;

    Point2 to_frame(Point2 p) const {
        const Point2 w = p - origin;
        return {dot(u, w), dot(v, w)};
    }
    Point2 to_plane_dir(double slope) const {
        const double inv = 1.0 / std::hypot(1.0, slope);
        return {inv * (u.x + slope * v.x), inv * (u.y + slope * v.y)};
    }
};

Frame make_frame(Point2 origin, double angle) {
    Frame f;
    f.origin = origin;
    f.angle = angle;
    f.u = {std::cos(angle), std::sin(angle)};
    f.v = {-f.u.y, f.u.x};
    return f;
}

// Portal endpoints in frame coordinates, ordered left (above) then right.
struct FramedPortal {
    Point2 left, right;
    double length;        // plane length
    Point2 plane_a, plane_b;
};

// Portal j is the image of a counterclockwise table edge under j
// reflections, so copy j lies left of the oriented portal iff j is even.
// The trajectory exits copy j through portal j, which fixes the crossing
// orientation: for even j the edge tip is the left (above-line) endpoint,
// for odd j the edge base is.  Deciding by parity instead of comparing
// frame coordinates keeps portals parallel to the travel direction from
// being oriented by floating-point noise.
FramedPortal frame_portal(const Frame& f, const Segment& s, bool odd) {
    const Point2 pa = f.to_frame(s.a), pb = f.to_frame(s.b);
    FramedPortal fp;
    fp.length = dist(s.a, s.b);
    if (odd) {
        fp.left = pa;
        fp.right = pb;
        fp.plane_a = s.a;
        fp.plane_b = s.b;
    } else {
        fp.left = pb;
        fp.right = pa;
        fp.plane_a = s.b;
        fp.plane_b = s.a;
    }
    return fp;
}

// Crossing parameter (0 at left endpoint, 1 at right) of the line
// y = slope*x + b with the portal; clamped to [0,1].
double crossing_param(const FramedPortal& p, double a, double b) {
    const double fl = p.left.y - a * p.left.x - b;
    const double fr = p.right.y - a * p.right.x - b;
    const double denom = fl - fr;
    if (std::abs(denom) < 1e-300) return 0.5;
    return std::clamp(fl / denom, 0.0, 1.0);
}

bool segments_properly_cross(Point2 a, Point2 b, Point2 c, Point2 d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

std::vector<std::size_t> reflex_vertices(const LabeledPolygon& poly) {
    std::vector<std::size_t> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 prev = poly.vertices[(i + n - 1) % n];
        const Point2 cur = poly.vertices[i];
        const Point2 next = poly.vertices[(i + 1) % n];
        if (cross(cur - prev, next - cur) <= 0.0) out.push_back(i);
    }
    return out;
}

}  // namespace

Development develop(const LabeledPolygon& poly, const BounceWord& word) {
    Development dev{poly, word, {}, {}};
    dev.copies.push_back(Isometry2{});
    for (std::size_t j = 0; j < word.size(); ++j) {
        if (j > 0 && word.letters[j] == word.letters[j - 1]) {
            throw std::invalid_argument("develop: repeated consecutive label");
        }
        const std::size_t e = poly.edge_index(word.letters[j]);
        const Segment edge = poly.edge(e);
        const Isometry2& g = dev.copies.back();
        const Segment portal{g.apply(edge.a), g.apply(edge.b)};
        dev.portals.push_back(portal);
        dev.copies.push_back(compose(reflect_across_segment(portal), g));
    }
    return dev;
}

Corridor corridor(const Development& dev) {
    Corridor corr;
    corr.word = dev.word;
    const std::size_t n = dev.portals.size();
    if (n == 0) throw std::invalid_argument("corridor: empty word");
    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (dev.word.letters[j] == dev.word.letters[j + 1]) {
            corr.diagnostics = "consecutive repeated letter";
            return corr;
        }
    }

    const double diam = diameter(dev.table);
    const Point2 chord_base =
        0.5 * (dev.portals.front().a + dev.portals.front().b);
    const Point2 chord_tip = 0.5 * (dev.portals.back().a + dev.portals.back().b);
    double base_angle;
    if (n >= 2 && dist(chord_base, chord_tip) > eps_geom * std::max(diam, 1.0)) {
        const Point2 c = chord_tip - chord_base;
        base_angle = std::atan2(c.y, c.x);
    } else {
        // Single portal (or coincident midpoints): aim across the portal.
        const Point2 d = dev.portals.front().b - dev.portals.front().a;
        base_angle = std::atan2(-d.x, d.y);
    }

    // Intercept cap: any portal-crossing line satisfies |b| <= B.
    double max_abs = 1.0;
    Frame probe = make_frame(chord_base, base_angle);
    for (const Segment& s : dev.portals) {
        for (const Point2 p : {probe.to_frame(s.a), probe.to_frame(s.b)}) {
            max_abs = std::max({max_abs, std::abs(p.x), std::abs(p.y)});
        }
    }
    const double intercept_cap = max_abs * (slope_cap + 2.0);

    auto solve = [&](const Frame& f) {
        Region region{{-slope_cap, -intercept_cap},
                      {slope_cap, -intercept_cap},
                      {slope_cap, intercept_cap},
                      {-slope_cap, intercept_cap}};
        for (std::size_t j = 0; j < n; ++j) {
            const FramedPortal p = frame_portal(f, dev.portals[j], j % 2 == 1);
            // Left endpoint weakly above the line, right weakly below.
            region = clip(region, {-p.left.x, -1.0, p.left.y});
            if (region.empty()) break;
            region = clip(region, {p.right.x, 1.0, -p.right.y});
            if (region.empty()) break;
        }
        return region;
    };

    // Pick a frame whose feasible region stays away from the slope cap;
    // near-vertical feasible sets are recovered by the rotated re-solves.
    const double quarter = std::numbers::pi / 4.0;
    Frame frame = make_frame(chord_base, base_angle);
    Region region;
    double best_area = -1.0;
    // A single portal admits every slope, so every frame touches the slope
    // cap; only the perpendicular frame aims the travel direction at the
    // portal, so commit to it.
    if (n == 1) {
        region = solve(frame);
        if (region.size() < 3) {
            corr.diagnostics = "no transversal line exists";
            return corr;
        }
    } else
    for (const double off : {0.0, quarter, -quarter, 2.0 * quarter,
                             -2.0 * quarter}) {
        const Frame f = make_frame(chord_base, base_angle + off);
        Region r = solve(f);
        if (r.size() < 3) continue;
        bool cap_touch = false;
        for (const auto& p : r) {
            if (std::abs(p[0]) > slope_cap - 1e-6) cap_touch = true;
        }
        const double area = region_area(r);
        if (!cap_touch) {
            frame = f;
            region = std::move(r);
            best_area = -1.0;  // committed
            break;
        }
        if (area > best_area) {
            best_area = area;
            frame = f;
            region = std::move(r);
        }
    }
    if (region.size() < 3) {
        corr.diagnostics = "no transversal line exists";
        return corr;
    }

    std::vector<FramedPortal> portals;
    portals.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        portals.push_back(frame_portal(frame, dev.portals[j], j % 2 == 1));
    }

    const double tight_eps = eps_geom * (1.0 + max_abs);
    auto margin_at = [&](const std::array<double, 2>& w) {
        double m = std::numeric_limits<double>::infinity();
        for (const FramedPortal& p : portals) {
            const double ml = (p.left.y - w[0] * p.left.x - w[1]) /
                              std::hypot(p.left.x, 1.0);
            const double mr = (w[0] * p.right.x + w[1] - p.right.y) /
                              std::hypot(p.right.x, 1.0);
            m = std::min({m, ml, mr});
        }
        return m;
    };

    // Containment: a transversal of all portals may still exit a non-convex
    // copy between consecutive portals.  Returns the first table edge whose
    // copy-j image properly crosses the witness sub-segment, as framed
    // endpoints; feasible lines keep both endpoints of a blocking edge on
    // one side, so a violation splits the region into two sub-searches.
    const bool nonconvex = !reflex_vertices(dev.table).empty();
    auto find_blocking_edge = [&](const std::array<double, 2>& w, Point2& e1,
                                  Point2& e2) {
        for (std::size_t j = 1; j < n; ++j) {
            const double s0 = crossing_param(portals[j - 1], w[0], w[1]);
            const double s1 = crossing_param(portals[j], w[0], w[1]);
            const Point2 q0 =
                portals[j - 1].plane_a +
                s0 * (portals[j - 1].plane_b - portals[j - 1].plane_a);
            const Point2 q1 = portals[j].plane_a +
                              s1 * (portals[j].plane_b - portals[j].plane_a);
            const Point2 d = q1 - q0;
            const double shrink = 1e-9;
            const Point2 a = q0 + shrink * d;
            const Point2 b = q1 - shrink * d;
            for (std::size_t e = 0; e < dev.table.size(); ++e) {
                const Segment edge{dev.copies[j].apply(dev.table.edge(e).a),
                                   dev.copies[j].apply(dev.table.edge(e).b)};
                if (segments_properly_cross(a, b, edge.a, edge.b)) {
                    e1 = frame.to_frame(edge.a);
                    e2 = frame.to_frame(edge.b);
                    return true;
                }
            }
        }
        return false;
    };

    // Closed-loop verification: retrace the witness with the flow and demand
    // the development's word back.
    auto retrace_ok = [&](const std::array<double, 2>& w, Corridor& out) {
        const Point2 dir = frame.to_plane_dir(w[0]);
        const double s0 = crossing_param(portals[0], w[0], w[1]);
        const Point2 hit0 = portals[0].plane_a +
                            s0 * (portals[0].plane_b - portals[0].plane_a);
        // Entry point of the line into the table behind the first portal.
        double tau_entry = 0.0;
        bool have_entry = false;
        for (std::size_t e = 0; e < dev.table.size(); ++e) {
            const Segment seg = dev.table.edge(e);
            const Point2 ab = seg.b - seg.a;
            const double denom = cross(dir, ab);
            if (std::abs(denom) < 1e-14 * norm(ab)) continue;
            const Point2 rel = seg.a - hit0;
            const double t = cross(rel, ab) / denom;
            const double s = cross(rel, dir) / denom;
            if (s < -1e-9 || s > 1.0 + 1e-9) continue;
            if (t < -1e-9 * std::max(diam, 1.0) && (!have_entry || t > tau_entry)) {
                tau_entry = t;
                have_entry = true;
            }
        }
        if (!have_entry) return false;
        const Point2 start = hit0 + (0.5 * tau_entry) * dir;
        const double theta = std::atan2(dir.y, dir.x);
        try {
            const TraceResult tr = trace(dev.table, start, theta, n);
            if (tr.terminal != TraceResult::Terminal::completed) return false;
            if (tr.word.letters != dev.word.letters) return false;
        } catch (const std::exception&) {
            return false;
        }
        out.witness_point = start;
        out.witness_angle = theta;
        return true;
    };

    std::vector<Region> pending{std::move(region)};
    std::size_t nodes = 64 + 16 * n;
    bool verified = false;
    bool saw_tight = false;
    std::array<double, 2> witness{0.0, 0.0};
    while (!pending.empty() && nodes-- > 0 && !verified) {
        Region reg = std::move(pending.back());
        pending.pop_back();
        if (reg.size() < 3) continue;
        std::array<double, 2> w = region_centroid(reg);
        double margin = margin_at(w);
        for (const auto& v : reg) {
            // Pull candidates toward vertices in case the centroid sits badly.
            const std::array<double, 2> cand{0.5 * (w[0] + v[0]),
                                             0.5 * (w[1] + v[1])};
            const double m = margin_at(cand);
            if (m > margin) {
                margin = m;
                w = cand;
            }
        }
        if (margin < tight_eps || region_area(reg) <= 0.0) {
            saw_tight = true;
            continue;
        }
        if (nonconvex && n >= 2) {
            Point2 e1, e2;
            if (find_blocking_edge(w, e1, e2)) {
                Region above = clip(clip(reg, {-e1.x, -1.0, e1.y}),
                                    {-e2.x, -1.0, e2.y});
                Region below = clip(clip(reg, {e1.x, 1.0, -e1.y}),
                                    {e2.x, 1.0, -e2.y});
                if (above.size() >= 3) pending.push_back(std::move(above));
                if (below.size() >= 3) pending.push_back(std::move(below));
                continue;
            }
        }
        if (retrace_ok(w, corr)) {
            witness = w;
            region = std::move(reg);
            verified = true;
            break;
        }
        for (const auto& v : reg) {
            const std::array<double, 2> cand{0.7 * w[0] + 0.3 * v[0],
                                             0.7 * w[1] + 0.3 * v[1]};
            Point2 e1, e2;
            if (margin_at(cand) > tight_eps &&
                !(nonconvex && n >= 2 && find_blocking_edge(cand, e1, e2)) &&
                retrace_ok(cand, corr)) {
                witness = cand;
                region = std::move(reg);
                verified = true;
                break;
            }
        }
    }
    if (!verified) {
        corr.diagnostics =
            saw_tight ? "boundary-tight feasible set (line through a vertex)"
                      : "witness retrace failed";
        return corr;
    }

    corr.feasible = true;
    corr.frame_origin = chord_base;
    corr.frame_angle = frame.angle;
    corr.region = region;

    corr.angle_min = std::numeric_limits<double>::infinity();
    corr.angle_max = -std::numeric_limits<double>::infinity();
    for (const auto& p : region) {
        const double th = frame.angle + std::atan(p[0]);
        corr.angle_min = std::min(corr.angle_min, th);
        corr.angle_max = std::max(corr.angle_max, th);
    }

    // Width: smallest feasible crossing span over the portals, projected
    // perpendicular to the witness direction.
    const Point2 wdir = frame.to_plane_dir(witness[0]);
    corr.width = std::numeric_limits<double>::infinity();
    for (const FramedPortal& p : portals) {
        double s_min = 1.0, s_max = 0.0;
        for (const auto& v : region) {
            const double s = crossing_param(p, v[0], v[1]);
            s_min = std::min(s_min, s);
            s_max = std::max(s_max, s);
        }
        const Point2 pd = p.plane_b - p.plane_a;
        const double sin_angle = std::abs(cross(wdir, pd)) / norm(pd);
        corr.width = std::min(corr.width, std::max(0.0, s_max - s_min) *
                                              p.length * sin_angle);
    }
    corr.marginal = corr.width < width_floor_rel * diam;
    return corr;
}

bool is_realizable(const LabeledPolygon& poly, const BounceWord& word) {
    return corridor(develop(poly, word)).feasible;
}

double direction_bound(const LabeledPolygon& poly, const BounceWord& word,
                       double d_min) {
    (void)word;
    if (d_min <= 0.0) throw std::invalid_argument("direction_bound: d_min <= 0");
    return std::atan(2.0 * diameter(poly) / d_min);
}

double corridor_width(const Development& dev) {
    const Corridor corr = corridor(dev);
    if (!corr.feasible) {
        throw std::invalid_argument("corridor_width: infeasible word " +
                                    dev.word.str());
    }
    return corr.width;
}

std::vector<double> sample_witness_angles(const Corridor& corr,
                                          std::size_t count,
                                          unsigned long long seed) {
    if (!corr.feasible || corr.region.size() < 3) {
        throw std::invalid_argument("sample_witness_angles: infeasible corridor");
    }
    std::vector<double> out;
    out.reserve(count);
    std::exponential_distribution<double> exp1(1.0);
    for (std::size_t i = 0; i < count; ++i) {
        // Per-sample generator: deterministic regardless of call order.
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + i);
        double total = 0.0, a = 0.0;
        for (const auto& v : corr.region) {
            const double w = exp1(rng);
            total += w;
            a += w * v[0];
        }
        out.push_back(corr.frame_angle + std::atan(a / total));
    }
    return out;
}

}  // namespace bounce
