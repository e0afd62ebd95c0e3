#include "bounce/sturmian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bounce::sturmian {

namespace {

void check_input(long long p, long long q) {
    if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
}

struct Crossing {
    long long key;   // position along the line, scaled by p*q
    int tiebreak;    // resolves simultaneous grid crossings
    char letter;
};

std::string merge_crossings(std::vector<Crossing> events) {
    std::stable_sort(events.begin(), events.end(), [](const Crossing& a, const Crossing& b) {
        return a.key != b.key ? a.key < b.key : a.tiebreak < b.tiebreak;
    });
    std::string word;
    word.reserve(events.size());
    for (const Crossing& e : events) word.push_back(e.letter);
    return word;
}

// Crossing schedule for a line of slope p/q nudged just below the lattice
// diagonal: the line crosses horizontal grid line m at x = q*m/p (+0) and
// vertical grid line k at x = k; scaling positions by p removes fractions.
// Horizontal crossings win ties (the nudge puts them infinitesimally early
// relative to the vertex they replace) -- except at the origin itself, where
// the period starts with the horizontal crossing.
std::string below_diagonal_word(long long p, long long q, long long periods) {
    std::vector<Crossing> events;
    for (long long m = 0; m < periods * p; ++m) events.push_back({q * m, 1, '0'});
    for (long long k = 1; k <= periods * q; ++k) events.push_back({p * k, 0, '1'});
    return merge_crossings(std::move(events));
}

// The companion schedule for a line nudged just above the diagonal, where
// horizontal crossings land late (keys q*m for m = 1..periods*p) and win
// ties against the vertical crossing at the same lattice point.
std::string above_diagonal_word(long long p, long long q, long long periods) {
    std::vector<Crossing> events;
    for (long long m = 1; m <= periods * p; ++m) events.push_back({q * m, 0, '0'});
    for (long long k = 1; k <= periods * q; ++k) events.push_back({p * k, 1, '1'});
    return merge_crossings(std::move(events));
}

std::string rotate_to_first_zero(std::string word) {
    const std::size_t at = word.find('0');
    if (at == std::string::npos || at == 0) return word;
    std::rotate(word.begin(), word.begin() + static_cast<long>(at), word.end());
    return word;
}

}  // namespace

std::string cutting_sequence(long long p, long long q) {
    check_input(p, q);
    return below_diagonal_word(p, q, 1);
}

SquareCode square_bounce_word(long long p, long long q) {
    check_input(p, q);
    // Unfolding the square tiles the plane with the unit grid, so one period
    // of the bounce word is two periods of the cutting sequence.  The phase
    // of the trajectory relative to the lattice fixes which side of the
    // diagonal the coding line sits on: shallow trajectories (p >= q) start
    // below it, steep ones (p < q) above it, rotated to the first 0.
    std::string word = p >= q ? below_diagonal_word(p, q, 2)
                              : rotate_to_first_zero(above_diagonal_word(p, q, 2));
    return {p, q, std::move(word)};
}

InsertionPattern insertion_strings(long long p, long long q) {
    const SquareCode code = square_bounce_word(p, q);
    InsertionPattern pattern{p, q, {}, {}};
    // Runs of 1s after each 0; the word starts with 0 so runs partition it.
    const std::string& w = code.word;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != '0') continue;
        int run = 0;
        for (std::size_t j = i + 1; j < w.size() && w[j] == '1'; ++j) ++run;
        pattern.lengths.push_back(run);
    }
    // Letters alternate within each string; each nonempty string starts with
    // the letter its nonempty predecessor did not end with, and the first
    // nonempty string starts with B.
    char next_start = 'B';
    for (int len : pattern.lengths) {
        std::string s;
        char c = next_start;
        for (int i = 0; i < len; ++i) {
            s.push_back(c);
            c = c == 'A' ? 'B' : 'A';
        }
        if (len > 0) next_start = c;  // c is the letter the string did not end with
        pattern.strings.push_back(std::move(s));
    }
    return pattern;
}

}  // namespace bounce::sturmian
