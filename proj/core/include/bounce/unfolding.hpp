#pragma once

#include <array>
#include <string>
#include <vector>

#include "bounce/flow.hpp"
#include "bounce/geometry.hpp"

namespace bounce {

// Words whose corridor width falls below width_floor_rel * diameter are
// still reported feasible but flagged numerically marginal.
inline constexpr double width_floor_rel = 1e-10;

// Chain of reflected copies of the table along an edge word.  copies[0] is
// the identity; portals[j] is the image of edge word[j] under copies[j],
// shared between copies j and j+1.
struct Development {
    LabeledPolygon table;
    BounceWord word;
    std::vector<Isometry2> copies;   // |word| + 1 entries
    std::vector<Segment> portals;    // |word| entries
};

// Feasible set of directed transversal lines for a word, as a convex region
// in (slope, intercept) coordinates of a chord-aligned frame.
struct Corridor {
    BounceWord word;
    bool feasible = false;
    Point2 witness_point;        // point on the witness line
    double witness_angle = 0.0;  // direction of travel
    double width = 0.0;
    double angle_min = 0.0;
    double angle_max = 0.0;
    bool marginal = false;       // width below the floor
    std::string diagnostics;

    // Frame and feasible region, exposed for witness sampling.
    Point2 frame_origin;
    double frame_angle = 0.0;
    std::vector<std::array<double, 2>> region;  // (slope, intercept) vertices
};

// Builds the development of the word.  Throws std::invalid_argument on an
// unknown label or a repeated consecutive label.
Development develop(const LabeledPolygon& poly, const BounceWord& word);

// Decides whether some straight line crosses every portal in order through
// its interior (equivalently, whether the word is realized by a trajectory).
// Feasible results carry a witness verified by retracing it with the flow.
Corridor corridor(const Development& dev);

bool is_realizable(const LabeledPolygon& poly, const BounceWord& word);

// arctan(2*diam(P) / d_min): upper bound on the angle between any two
// directions realizing a word whose translation distance is at least d_min.
double direction_bound(const LabeledPolygon& poly, const BounceWord& word,
                       double d_min);

// Width of the feasible corridor; throws if the word is infeasible.
double corridor_width(const Development& dev);

// Directions of `count` lines sampled from the feasible region
// (deterministic per seed).  Throws if the corridor is infeasible.
std::vector<double> sample_witness_angles(const Corridor& corr,
                                          std::size_t count,
                                          unsigned long long seed);

}  // namespace bounce
