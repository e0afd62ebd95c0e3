#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bounce/geometry.hpp"

namespace bounce {

struct RayState {
    Point2 position;
    double theta = 0.0;  // radians, counterclockwise from +x
};

// Finite word over the edge alphabet; no letter equals its successor.
struct BounceWord {
    std::vector<EdgeLabel> letters;

    BounceWord() = default;
    explicit BounceWord(std::vector<EdgeLabel> ls);
    // Parse "B,D,B" (comma-separated labels).
    static BounceWord parse(const std::string& text);

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    std::string str() const;  // comma-joined
    bool operator==(const BounceWord&) const = default;
};

struct StepEvent {
    bool singular = false;
    std::size_t edge_index = 0;    // valid when !singular
    Point2 impact;                 // valid when !singular
    std::size_t vertex_index = 0;  // valid when singular
};

struct TraceResult {
    BounceWord word;
    enum class Terminal { completed, singular } terminal = Terminal::completed;
    std::size_t singular_vertex = 0;  // valid when terminal == singular
    std::vector<Point2> impact_points;
};

// Singularity radius used by the tracer, relative to diameter(poly).
inline constexpr double eps_vertex_rel = 1e-9;

// First boundary intersection of the ray from state; singular when the hit
// is within the vertex radius or the ray runs tangent to the hit edge.
StepEvent step(const LabeledPolygon& poly, const RayState& state);

// Reflected direction of a ray hitting the edge.  Throws
// std::invalid_argument when the ray is parallel to the edge.
double reflect_direction(double theta_in, const Segment& edge);

// Bounce word of n_bounces reflections starting from (p, theta).  Impact
// points come from intersecting one fixed line with unfolded table copies,
// so the error grows linearly in the bounce count.  If p lies on an edge,
// that edge is not emitted as the first letter.
TraceResult trace(const LabeledPolygon& poly, Point2 p, double theta,
                  std::size_t n_bounces);

}  // namespace bounce
