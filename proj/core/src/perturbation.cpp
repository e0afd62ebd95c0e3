#include "bounce/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace bounce {

namespace {

// Minimum feature size: smallest edge length and smallest distance from a
// vertex to a non-incident edge.  Perturbations must stay well below this.
double min_feature_size(const LabeledPolygon& poly) {
    const std::size_t n = poly.size();
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        m = std::min(m, dist(poly.vertices[i], poly.vertices[(i + 1) % n]));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t e = 0; e < n; ++e) {
            if (e == i || (e + 1) % n == i) continue;
            m = std::min(m, point_segment_distance(poly.vertices[i], poly.edge(e)));
        }
    }
    return m;
}

// Displacement bound for development-copy vertices per unit perturbation of
// the table vertices, via a finite-difference Jacobian of the reflection
// chain; falls back to 3^|word| if differentiation misbehaves.
double sensitivity_bound(const LabeledPolygon& poly, const BounceWord& word) {
    const double h = 1e-6 * std::max(diameter(poly), 1.0);
    const std::size_t n = poly.size();

    auto copy_vertices = [&](const LabeledPolygon& p) {
        std::vector<Point2> out;
        const Development dev = develop(p, word);
        for (const Isometry2& g : dev.copies) {
            for (const Point2& v : p.vertices) out.push_back(g.apply(v));
        }
        return out;
    };

    const std::vector<Point2> base = copy_vertices(poly);
    // Per copy-vertex: sum over table vertices of the Frobenius norm of the
    // 2x2 Jacobian block (an upper bound on the operator norm).
    std::vector<double> total(base.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Point2> cols[2];
        for (int axis = 0; axis < 2; ++axis) {
            LabeledPolygon p = poly;
            if (axis == 0) {
                p.vertices[i].x += h;
            } else {
                p.vertices[i].y += h;
            }
            const std::vector<Point2> moved = copy_vertices(p);
            cols[axis].resize(base.size());
            for (std::size_t v = 0; v < base.size(); ++v) {
                cols[axis][v] = {(moved[v].x - base[v].x) / h,
                                 (moved[v].y - base[v].y) / h};
            }
        }
        for (std::size_t v = 0; v < base.size(); ++v) {
            const double fro = std::sqrt(
                cols[0][v].x * cols[0][v].x + cols[0][v].y * cols[0][v].y +
                cols[1][v].x * cols[1][v].x + cols[1][v].y * cols[1][v].y);
            total[v] += fro;
        }
    }
    double sens = 0.0;
    for (const double t : total) sens = std::max(sens, t);
    if (!std::isfinite(sens) || sens < 1.0) {
        sens = std::pow(3.0, static_cast<double>(word.size()));
    }
    return sens;
}

}  // namespace

ClearanceResult vertex_clearance(const LabeledPolygon& poly,
                                 const BounceWord& word) {
    const Development dev = develop(poly, word);
    const Corridor corr = corridor(dev);
    if (!corr.feasible) {
        throw std::invalid_argument("vertex_clearance: infeasible word " + word.str());
    }
    const std::size_t n = dev.portals.size();
    const Point2 dir{std::cos(corr.witness_angle), std::sin(corr.witness_angle)};

    // Crossing points of the witness line with the portals.
    std::vector<Point2> crossings;
    crossings.push_back(corr.witness_point);
    for (const Segment& portal : dev.portals) {
        const Point2 ab = portal.b - portal.a;
        const double denom = cross(dir, ab);
        const Point2 rel = portal.a - corr.witness_point;
        const double t = cross(rel, ab) / denom;
        crossings.push_back(corr.witness_point + t * dir);
    }

    double delta = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j <= n; ++j) {
        // In-copy segment: crossings[j] -> crossings[j+1]; the last copy
        // contributes only its portal crossing point.
        const Segment seg{crossings[j], crossings[std::min(j + 1, n)]};
        for (const Point2& v : poly.vertices) {
            delta = std::min(delta,
                             point_segment_distance(dev.copies[j].apply(v), seg));
        }
    }
    return {delta, corr.witness_point, corr.witness_angle};
}

PersistenceCertificate persistence_radius(const LabeledPolygon& poly,
                                          const std::vector<BounceWord>& words) {
    if (words.empty()) {
        throw std::invalid_argument("persistence_radius: empty word set");
    }
    PersistenceCertificate cert;
    cert.words = words;
    cert.delta = std::numeric_limits<double>::infinity();
    double epsilon = std::numeric_limits<double>::infinity();
    for (const BounceWord& w : words) {
        const ClearanceResult clearance = vertex_clearance(poly, w);
        const double sens = sensitivity_bound(poly, w);
        // Safety factor absorbs the curvature the affine model ignores.
        const double eps_w = 0.5 * clearance.delta / sens;
        if (eps_w < epsilon) {
            epsilon = eps_w;
            cert.witness_point = clearance.witness_point;
            cert.witness_angle = clearance.witness_angle;
        }
        cert.delta = std::min(cert.delta, clearance.delta);
        cert.sensitivity = std::max(cert.sensitivity, sens);
    }
    // Keep every perturbed polygon simple and non-degenerate.
    epsilon = std::min(epsilon, 0.25 * min_feature_size(poly));
    cert.epsilon = epsilon;
    return cert;
}

std::vector<LabeledPolygon> sample_perturbed(const LabeledPolygon& poly,
                                             double epsilon, std::size_t count,
                                             unsigned long long seed) {
    if (epsilon < 0.0) throw std::invalid_argument("sample_perturbed: epsilon < 0");
    std::vector<LabeledPolygon> out;
    out.reserve(count);
    if (epsilon == 0.0) {
        out.assign(count, poly);
        return out;
    }
    for (std::size_t s = 0; s < count; ++s) {
        // Per-sample generator: deterministic regardless of scheduling.
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + s + 1);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        bool accepted = false;
        for (int attempt = 0; attempt < 1000 && !accepted; ++attempt) {
            std::vector<Point2> vs = poly.vertices;
            for (Point2& v : vs) {
                const double r = epsilon * std::sqrt(unit(rng));
                const double phi = 2.0 * 3.141592653589793 * unit(rng);
                v.x += r * std::cos(phi);
                v.y += r * std::sin(phi);
            }
            const LabeledPolygon candidate{vs, poly.labels};
            if (validate(candidate).valid) {
                out.push_back(candidate);
                accepted = true;
            }
        }
        if (!accepted) {
            throw std::runtime_error(
                "sample_perturbed: rejection sampling failed 1000 times "
                "(epsilon too large)");
        }
    }
    return out;
}

ImpossibilityReport demonstrate_impossibility(const LabeledPolygon& poly,
                                              const std::vector<BounceWord>& words,
                                              std::size_t count,
                                              unsigned long long seed) {
    ImpossibilityReport report;
    report.certificate = persistence_radius(poly, words);
    report.sampled = sample_perturbed(poly, report.certificate.epsilon, count, seed);
    report.samples = report.sampled.size();

    for (std::size_t s = 0; s < report.sampled.size(); ++s) {
        bool persists = true;
        for (const BounceWord& w : words) {
            if (!is_realizable(report.sampled[s], w)) {
                persists = false;
                if (report.failure.empty()) {
                    report.failure = "sample " + std::to_string(s) +
                                     " lost word " + w.str();
                }
                break;
            }
        }
        if (persists) ++report.persistent_samples;
    }
    report.certificate.samples_checked = report.samples * words.size();
    report.all_persist = report.persistent_samples == report.samples;

    // The impossibility witness: two genuinely different tables sharing the
    // entire word set.
    const double threshold = 0.5 * report.certificate.epsilon;
    for (std::size_t i = 0; i < report.sampled.size() && !report.distinct_pair_found;
         ++i) {
        for (std::size_t j = i + 1; j < report.sampled.size(); ++j) {
            double d = 0.0;
            for (std::size_t v = 0; v < poly.size(); ++v) {
                d = std::max(d, dist(report.sampled[i].vertices[v],
                                     report.sampled[j].vertices[v]));
            }
            if (d > threshold) {
                report.distinct_pair_found = true;
                report.distinct_i = i;
                report.distinct_j = j;
                report.distinct_distance = d;
                break;
            }
        }
    }
    return report;
}

}  // namespace bounce
