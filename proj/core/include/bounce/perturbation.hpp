#pragma once

#include <string>
#include <vector>

#include "bounce/unfolding.hpp"

namespace bounce {

struct PersistenceCertificate {
    std::vector<BounceWord> words;
    double epsilon = 0.0;       // vertex-perturbation radius
    double delta = 0.0;         // smallest vertex clearance over the words
    double sensitivity = 0.0;   // largest displacement bound L over the words
    Point2 witness_point;       // witness line of the tightest word
    double witness_angle = 0.0;
    std::size_t samples_checked = 0;
};

// delta: minimum distance from the witness line's in-copy segments to the
// vertices of the development copies; witness from the corridor.
struct ClearanceResult {
    double delta = 0.0;
    Point2 witness_point;
    double witness_angle = 0.0;
};
ClearanceResult vertex_clearance(const LabeledPolygon& poly,
                                 const BounceWord& word);

// epsilon = min over words of delta_w / L_w, where L_w bounds development
// vertex displacement per unit vertex perturbation, capped to keep every
// perturbed polygon simple.  Throws if a word is infeasible or the set empty.
PersistenceCertificate persistence_radius(const LabeledPolygon& poly,
                                          const std::vector<BounceWord>& words);

// count polygons with every vertex displaced inside the open epsilon-disk,
// all valid, labels preserved; deterministic per seed.
std::vector<LabeledPolygon> sample_perturbed(const LabeledPolygon& poly,
                                             double epsilon, std::size_t count,
                                             unsigned long long seed);

struct ImpossibilityReport {
    PersistenceCertificate certificate;
    std::size_t samples = 0;
    std::size_t persistent_samples = 0;
    bool all_persist = false;
    // Two geometrically distinct samples (vertex distance > epsilon/2)
    // sharing every word; indices into the sample list.
    bool distinct_pair_found = false;
    std::size_t distinct_i = 0, distinct_j = 0;
    double distinct_distance = 0.0;
    std::vector<LabeledPolygon> sampled;
    std::string failure;  // first failing (sample, word) if any
};

// Certifies the words, samples perturbed tables, and checks that every
// sample still realizes every word -- the finite-information witness.
ImpossibilityReport demonstrate_impossibility(const LabeledPolygon& poly,
                                              const std::vector<BounceWord>& words,
                                              std::size_t count,
                                              unsigned long long seed);

}  // namespace bounce
