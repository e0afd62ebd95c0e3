#include "bounce/language.hpp"

#include <numbers>
#include <stdexcept>

namespace bounce {

LanguageTable enumerate_language(const LabeledPolygon& poly, std::size_t max_len) {
    if (max_len < 1) throw std::invalid_argument("enumerate_language: max_len < 1");
    LanguageTable table;
    table.alphabet = poly.labels;
    table.max_len = max_len;

    // Every edge is hit by some trajectory, so all single letters belong.
    std::vector<std::vector<EdgeLabel>> frontier;
    for (const EdgeLabel& l : poly.labels) {
        table.words.insert({l});
        frontier.push_back({l});
    }
    // The language is factor-closed, so w.e feasible implies w feasible and
    // breadth-first extension of feasible words finds every member.
    for (std::size_t len = 2; len <= max_len && !frontier.empty(); ++len) {
        std::vector<std::vector<EdgeLabel>> next;
        for (const auto& w : frontier) {
            for (const EdgeLabel& e : poly.labels) {
                if (e == w.back()) continue;
                std::vector<EdgeLabel> we = w;
                we.push_back(e);
                const Corridor corr = corridor(develop(poly, BounceWord(we)));
                if (!corr.feasible) continue;
                table.words.insert(we);
                if (corr.marginal) table.marginal.insert(we);
                next.push_back(std::move(we));
            }
        }
        frontier = std::move(next);
    }
    return table;
}

bool LanguageCache::contains(const std::vector<EdgeLabel>& word) const {
    if (word.empty()) return true;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] == word[i + 1]) return false;
    }
    const auto it = cache_.find(word);
    if (it != cache_.end()) return it->second;
    // A word can only be feasible if its parent prefix is; checking the
    // prefix first keeps the recursion cheap and seeds the cache.
    bool ok = true;
    if (word.size() > 1) {
        std::vector<EdgeLabel> prefix(word.begin(), word.end() - 1);
        ok = contains(prefix);
    }
    if (ok) ok = is_realizable(poly_, BounceWord(word));
    cache_.emplace(word, ok);
    return ok;
}

namespace {

std::vector<EdgeLabel> alternating_word(const EdgeLabel& a, const EdgeLabel& b,
                                        std::size_t len) {
    std::vector<EdgeLabel> w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? a : b);
    return w;
}

}  // namespace

std::size_t max_alternation(const LanguageTable& table, const EdgeLabel& a,
                            const EdgeLabel& b) {
    if (a == b) throw std::invalid_argument("max_alternation: equal labels");
    std::size_t best = 0;
    for (std::size_t len = 1; len <= table.max_len; ++len) {
        if (table.contains(alternating_word(a, b, len)) ||
            table.contains(alternating_word(b, a, len))) {
            best = len;
        }
    }
    return best;
}

std::size_t max_alternation(const LabeledPolygon& poly, const EdgeLabel& a,
                            const EdgeLabel& b, std::size_t search_len) {
    if (a == b) throw std::invalid_argument("max_alternation: equal labels");
    // Alternating words are members exactly when realizable (factor
    // closure), so testing them directly suffices.
    std::size_t best = 0;
    for (std::size_t len = 1; len <= search_len; ++len) {
        if (is_realizable(poly, BounceWord(alternating_word(a, b, len))) ||
            is_realizable(poly, BounceWord(alternating_word(b, a, len)))) {
            best = len;
        } else if (best > 0) {
            break;
        }
    }
    return best;
}

std::pair<double, double> coarse_angle_bound(std::size_t k) {
    if (k == 0) throw std::invalid_argument("coarse_angle_bound: k = 0");
    const double lo = std::numbers::pi / static_cast<double>(k);
    const double hi = k == 1 ? 2.0 * std::numbers::pi
                             : std::numbers::pi / static_cast<double>(k - 1);
    return {lo, hi};
}

bool convexity_test(const LanguageTable& table) {
    if (table.max_len < 2) throw std::invalid_argument("convexity_test: max_len < 2");
    for (const EdgeLabel& a : table.alphabet) {
        for (const EdgeLabel& b : table.alphabet) {
            if (a == b) continue;
            if (!table.contains({a, b})) return false;
        }
    }
    return true;
}

}  // namespace bounce
