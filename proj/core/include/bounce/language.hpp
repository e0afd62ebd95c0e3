#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bounce/unfolding.hpp"

namespace bounce {

struct LanguageTable {
    std::vector<EdgeLabel> alphabet;
    std::size_t max_len = 0;
    std::set<std::vector<EdgeLabel>> words;             // all members, |w| <= max_len
    std::set<std::vector<EdgeLabel>> marginal;          // subset with width < floor

    bool contains(const std::vector<EdgeLabel>& w) const {
        return words.count(w) > 0;
    }
};

// Exact enumeration of the bounce language up to max_len by breadth-first
// word extension with corridor pruning.
LanguageTable enumerate_language(const LabeledPolygon& poly, std::size_t max_len);

// Memoized realizability oracle over one polygon.
class LanguageCache {
  public:
    explicit LanguageCache(LabeledPolygon poly) : poly_(std::move(poly)) {}

    bool contains(const std::vector<EdgeLabel>& word) const;
    const LabeledPolygon& polygon() const { return poly_; }

  private:
    LabeledPolygon poly_;
    mutable std::map<std::vector<EdgeLabel>, bool> cache_;
};

// Longest alternating factor ABAB... or BABA... present in the language.
std::size_t max_alternation(const LanguageTable& table, const EdgeLabel& a,
                            const EdgeLabel& b);
std::size_t max_alternation(const LabeledPolygon& poly, const EdgeLabel& a,
                            const EdgeLabel& b, std::size_t search_len);

// Interval [pi/k, pi/(k-1)) bracketing the corner angle given the maximum
// alternation length k; k = 1 yields [pi, 2*pi).
std::pair<double, double> coarse_angle_bound(std::size_t k);

// True iff every ordered pair of distinct labels is in the language.
bool convexity_test(const LanguageTable& table);

}  // namespace bounce
