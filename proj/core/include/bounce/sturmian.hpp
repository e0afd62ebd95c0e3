#pragma once

#include <string>
#include <vector>

namespace bounce::sturmian {

struct SquareCode {
    long long p = 0;
    long long q = 0;
    std::string word;  // over {0,1}; starts with 0; 2p zeros, 2q ones
};

struct InsertionPattern {
    long long p = 0;
    long long q = 0;
    std::vector<std::string> strings;  // 2p alternating words over {A,B}
    std::vector<int> lengths;          // run lengths of 1s; sums to 2q
};

// One period of the cutting sequence of a line of slope p/q across the unit
// grid, started just right of the origin: 0 per horizontal-line crossing,
// 1 per vertical-line crossing.  Throws on non-coprime or nonpositive input.
std::string cutting_sequence(long long p, long long q);

// Bounce word of one period of the slope-p/q trajectory on the square table
// (horizontal edges -> 0, vertical edges -> 1), i.e. the doubled cutting
// sequence rotated to start with 0.
SquareCode square_bounce_word(long long p, long long q);

// Alternating A/B insertion strings whose lengths are the runs of 1s
// between the 0s of square_bounce_word(p, q).
InsertionPattern insertion_strings(long long p, long long q);

}  // namespace bounce::sturmian
