#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bounce/geometry.hpp"
#include "bounce/oracle.hpp"

namespace bounce {

struct AdjacencyResult {
    // Unordered adjacent pairs, each sorted, the list sorted.
    std::vector<std::pair<EdgeLabel, EdgeLabel>> pairs;
    // Cyclic edge order when every label has exactly two partners; empty
    // otherwise.  Starts at the lexicographically smallest label, oriented
    // toward its smaller neighbor.
    std::vector<EdgeLabel> cyclic_order;
    std::size_t depth = 0;  // certification depth
};

// {A,B} is reported adjacent iff some word w with |w| = depth extends both
// A and B and survives the finite-depth grazing filter.
AdjacencyResult adjacency_pairs(const SpectrumOracle& oracle, std::size_t depth);

// True iff a palindromic chain E_n..E_1 A B E_1..E_n stays in the language
// along a single nested chain up to n = depth.
bool detect_right_angle(const SpectrumOracle& oracle, const EdgeLabel& a,
                        const EdgeLabel& b, std::size_t depth);

// One matching sequence truncated to depth n: the witnessed word is
// pre . insertion . post with |pre| = |post| = n.
struct SequenceRecord {
    std::vector<EdgeLabel> pre;
    std::vector<EdgeLabel> insertion;  // alternating word over the pair
    std::vector<EdgeLabel> post;
};

struct MatchingFamily {
    EdgeLabel a, b;
    std::size_t depth = 0;
    std::vector<SequenceRecord> sequences;  // cyclic; closed by construction
    std::vector<int> insertion_lengths;
    std::size_t total_insertion = 0;
};

enum class SearchStatus { found, not_found, budget_exhausted };

struct FamilySearchResult {
    SearchStatus status = SearchStatus::not_found;
    std::optional<MatchingFamily> family;
};

// Matching-sequence search: anchor at a maximal alternating
// block, chain sequences by reversed tail/head matching at depth n, close
// the cycle.  Deterministic; bounded by an internal query budget.
FamilySearchResult find_matching_family(const SpectrumOracle& oracle,
                                        const EdgeLabel& a, const EdgeLabel& b,
                                        std::size_t depth);

// True iff a closed family of exactly 2p sequences with insertion lengths
// cyclically matching insertion_strings(p, q) exists at every n <= depth.
bool verify_rational_angle(const SpectrumOracle& oracle, const EdgeLabel& a,
                           const EdgeLabel& b, long long p, long long q,
                           std::size_t depth);

struct AngleEstimate {
    EdgeLabel a, b;
    enum class Kind { exact_rational, estimate, none } kind = Kind::none;
    double value = 0.0;  // radians
    long long p = 0, q = 0;            // set for exact_rational, gcd(p,q) = 1
    std::size_t num_sequences = 0;
    std::size_t total_insertion = 0;
    std::size_t depth = 0;  // deepest level with a family
    std::string notes;
};

// pi * (family size) / (total insertion), upgraded to exact_rational when
// the family is stable for three consecutive depths.
AngleEstimate estimate_angle(const SpectrumOracle& oracle, const EdgeLabel& a,
                             const EdgeLabel& b, std::size_t depth);

// Recovers a triangle (normalized) from its oracle: all three corner angles
// are estimated and rescaled to sum to pi.  Throws if an angle estimate is
// missing or the sum is off by more than 0.05 rad.
LabeledPolygon reconstruct_triangle(const SpectrumOracle& oracle,
                                    std::size_t depth);

}  // namespace bounce
