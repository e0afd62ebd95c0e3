// Acceptance suite: one [PASS]/[FAIL] line per criterion.  Exit code is the
// number of failing criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bounce/flow.hpp"
#include "bounce/geometry.hpp"
#include "bounce/language.hpp"
#include "bounce/oracle.hpp"
#include "bounce/perturbation.hpp"
#include "bounce/polygon_io.hpp"
#include "bounce/reconstruction.hpp"
#include "bounce/sturmian.hpp"
#include "bounce/unfolding.hpp"

using namespace bounce;

namespace {

constexpr unsigned long long corpus_seed = 20260823ULL;

struct Outcome {
    bool pass = false;
    std::string detail;
};

LabeledPolygon unit_square() {
    return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                        {"A", "B", "C", "D"});
}

LabeledPolygon corner_triangle(double theta) {
    // Angle theta at the origin between edges A (origin->(1,0)) and C.
    return make_polygon(
        {{0, 0}, {1, 0}, {0.9 * std::cos(theta), 0.9 * std::sin(theta)}},
        {"A", "B", "C"});
}

// ------------------------------------------------------------------- 1 --

Outcome criterion1() {
    const auto w32 = sturmian::square_bounce_word(3, 2);
    if (w32.word != "0010100101") return {false, "word(3,2)=" + w32.word};
    const auto w512 = sturmian::square_bounce_word(5, 12);
    if (w512.word != "0110111011011011101101110110110111")
        return {false, "word(5,12)=" + w512.word};

    const std::vector<int> want32{0, 1, 1, 0, 1, 1};
    const std::vector<int> want512{2, 3, 2, 2, 3, 2, 3, 2, 2, 3};
    if (sturmian::insertion_strings(3, 2).lengths != want32)
        return {false, "insertion lengths (3,2)"};
    if (sturmian::insertion_strings(5, 12).lengths != want512)
        return {false, "insertion lengths (5,12)"};

    for (long long p = 1; p <= 50; ++p) {
        for (long long q = 1; q <= 50; ++q) {
            if (p == q || std::gcd(p, q) != 1) continue;
            const auto pat = sturmian::insertion_strings(p, q);
            const long long total =
                std::accumulate(pat.lengths.begin(), pat.lengths.end(), 0LL);
            if (total != 2 * q)
                return {false, "total insertion " + std::to_string(p) + "/" +
                                   std::to_string(q)};
            if (pat.strings.size() != static_cast<std::size_t>(2 * p))
                return {false, "string count " + std::to_string(p) + "/" +
                                   std::to_string(q)};
        }
    }
    return {true, "goldens and 2q totals for coprime p,q <= 50"};
}

// ------------------------------------------------------------------- 2 --

Outcome criterion2() {
    const LabeledPolygon sq = unit_square();
    const LanguageTable lang = enumerate_language(sq, 4);

    // All 12 ordered pairs of distinct labels.
    const std::vector<EdgeLabel> abc = sq.labels;
    std::size_t pairs = 0;
    for (const auto& x : abc)
        for (const auto& y : abc) {
            if (x == y) continue;
            if (!lang.contains({x, y}))
                return {false, "missing pair " + x + y};
            ++pairs;
        }
    if (pairs != 12) return {false, "pair count"};

    for (const auto& w : lang.words) {
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] == w[i - 1]) return {false, "consecutive repeat"};
    }
    // No ABA word across any square corner.
    const std::array<std::pair<const char*, const char*>, 4> corners{
        {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"D", "A"}}};
    for (const auto& [x, y] : corners) {
        if (lang.contains({x, y, x}) || lang.contains({y, x, y}))
            return {false, std::string("square has ") + x + y + x};
    }
    // The pi/3 rhombus does contain a corner ABA word.
    const double h = std::sqrt(3.0) / 2.0;
    const LabeledPolygon rhombus = make_polygon(
        {{0, 0}, {1, 0}, {1.5, h}, {0.5, h}}, {"A", "B", "C", "D"});
    const LanguageTable rlang = enumerate_language(rhombus, 3);
    bool aba = false;
    for (std::size_t i = 0; i < 4 && !aba; ++i) {
        const EdgeLabel x = rhombus.labels[i];
        const EdgeLabel y = rhombus.labels[(i + 1) % 4];
        aba = rlang.contains({x, y, x}) || rlang.contains({y, x, y});
    }
    if (!aba) return {false, "rhombus lacks corner ABA"};

    // Sampling cross-check: factors of one million random traces.
    std::mt19937_64 rng(corpus_seed);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    std::uniform_real_distribution<double> dir(0.0, 2.0 * std::numbers::pi);
    std::set<std::vector<EdgeLabel>> sampled;
    for (std::size_t i = 0; i < 1000000; ++i) {
        const Point2 p{unit(rng), unit(rng)};
        const TraceResult tr = trace(sq, p, dir(rng), 9);
        const auto& ls = tr.word.letters;
        for (std::size_t s = 0; s < ls.size(); ++s)
            for (std::size_t len = 1; len <= 4 && s + len <= ls.size(); ++len)
                sampled.insert({ls.begin() + s, ls.begin() + s + len});
    }
    for (const auto& w : sampled)
        if (!lang.contains(w))
            return {false, "sampled word missing from enumeration"};
    std::size_t unseen_solid = 0;
    for (const auto& w : lang.words)
        if (!sampled.count(w) && !lang.marginal.count(w)) ++unseen_solid;
    if (unseen_solid)
        return {false, std::to_string(unseen_solid) +
                           " non-marginal words never sampled"};
    return {true, std::to_string(lang.words.size()) + " words, " +
                      std::to_string(sampled.size()) + " sampled"};
}

// ------------------------------------------------------------------- 3 --

Outcome criterion3() {
    const auto rect = [](double w) {
        return make_polygon({{0, 0}, {w, 0}, {w, 1}, {0, 1}},
                            {"A", "B", "C", "D"});
    };
    const LanguageTable l1 = enumerate_language(rect(1.0), 8);
    const LanguageTable l2 = enumerate_language(rect(2.0), 8);
    const LanguageTable l3 = enumerate_language(rect(3.0), 8);
    if (l1.words != l2.words) return {false, "1x1 vs 2x1 differ"};
    if (l1.words != l3.words) return {false, "1x1 vs 3x1 differ"};
    return {true, std::to_string(l1.words.size()) + " words each"};
}

// ------------------------------------------------------------------- 4 --

Outcome criterion4() {
    const std::array<std::pair<double, std::size_t>, 3> cases{
        {{std::numbers::pi / 2 + 0.05, 2},
         {std::numbers::pi / 3 + 0.05, 3},
         {std::numbers::pi / 4 + 0.05, 4}}};
    for (const auto& [theta, want_k] : cases) {
        const LabeledPolygon tri = corner_triangle(theta);
        const std::size_t k = max_alternation(tri, "A", "C", 12);
        if (k != want_k)
            return {false, "theta=" + std::to_string(theta) + " k=" +
                               std::to_string(k)};
        const auto [lo, hi] = coarse_angle_bound(k);
        if (!(lo <= theta && theta < hi))
            return {false, "bound misses theta=" + std::to_string(theta)};
    }
    return {true, "k in {2,3,4} and brackets hold"};
}

// ------------------------------------------------------------------- 5 --

Outcome criterion5() {
    struct Case {
        const char* name;
        LabeledPolygon poly;
        EdgeLabel a, b;
        long long p, q;
    };
    const double th25 = 2.0 * std::numbers::pi / 5.0;
    const double th512 = 5.0 * std::numbers::pi / 12.0;
    const std::vector<Case> cases{
        {"square", unit_square(), "A", "B", 1, 2},
        {"equilateral",
         make_polygon({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}},
                      {"A", "B", "C"}),
         "A", "B", 1, 3},
        {"2pi5-corner", corner_triangle(th25), "A", "C", 2, 5},
        {"5pi12-corner", corner_triangle(th512), "A", "C", 5, 12},
        {"3pi2-reflex",
         make_polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}},
                      {"A", "B", "C", "D", "E", "F"}),
         "C", "D", 3, 2},
    };
    for (const Case& c : cases) {
        PolygonOracle oracle(c.poly);
        const AngleEstimate est = estimate_angle(oracle, c.a, c.b, 8);
        if (est.kind != AngleEstimate::Kind::exact_rational)
            return {false, std::string(c.name) + ": not exact_rational"};
        if (est.p != c.p || est.q != c.q)
            return {false, std::string(c.name) + ": got " +
                               std::to_string(est.p) + "/" +
                               std::to_string(est.q)};
        if (est.num_sequences != static_cast<std::size_t>(2 * c.p) ||
            est.total_insertion != static_cast<std::size_t>(2 * c.q))
            return {false, std::string(c.name) + ": family shape"};
    }
    return {true, "all five corners recovered exactly"};
}

// ------------------------------------------------------------------- 6 --

LabeledPolygon random_convex_table(std::mt19937_64& rng) {
    while (true) {
        const std::size_t m = 4 + rng() % 4;
        std::uniform_real_distribution<double> angle_d(0.0,
                                                       2.0 * std::numbers::pi);
        std::uniform_real_distribution<double> radius_d(0.7, 1.3);
        std::vector<double> angles(m);
        for (double& a : angles) a = angle_d(rng);
        std::sort(angles.begin(), angles.end());
        bool spaced = true;
        for (std::size_t i = 0; i < m; ++i) {
            const double gap = (i + 1 < m)
                                   ? angles[i + 1] - angles[i]
                                   : angles[0] + 2.0 * std::numbers::pi -
                                         angles[m - 1];
            if (gap < 0.35) spaced = false;
        }
        if (!spaced) continue;
        std::vector<Point2> pts(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double r = radius_d(rng);
            pts[i] = {r * std::cos(angles[i]), r * std::sin(angles[i])};
        }
        bool convex = true;
        for (std::size_t i = 0; i < m; ++i) {
            const Point2 u = pts[(i + 1) % m] - pts[i];
            const Point2 v = pts[(i + 2) % m] - pts[(i + 1) % m];
            if (cross(u, v) < 0.08) convex = false;
        }
        if (!convex) continue;
        return make_polygon(pts);
    }
}

std::vector<std::pair<EdgeLabel, EdgeLabel>> true_adjacency(
    const LabeledPolygon& poly) {
    std::set<std::pair<EdgeLabel, EdgeLabel>> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        EdgeLabel x = poly.labels[i], y = poly.labels[(i + 1) % n];
        if (y < x) std::swap(x, y);
        out.insert({x, y});
    }
    return {out.begin(), out.end()};
}

Outcome criterion6() {
    std::vector<std::pair<std::string, LabeledPolygon>> corpus;
    corpus.emplace_back(
        "l-shape",
        make_polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}},
                     {"A", "B", "C", "D", "E", "F"}));
    corpus.emplace_back(
        "dart", make_polygon({{0, 0}, {2, 0}, {1, 1.6}, {1, 0.5}},
                             {"A", "B", "C", "D"}));
    corpus.emplace_back("arrow",
                        make_polygon({{0, 0}, {3, 0}, {1.5, 2.2}, {1.5, 0.8}},
                                     {"A", "B", "C", "D"}));
    corpus.emplace_back(
        "chevron-pent",
        make_polygon({{0, 0}, {2, 0}, {2, 1.5}, {1, 0.5}, {0, 1.5}},
                     {"A", "B", "C", "D", "E"}));
    corpus.emplace_back(
        "staircase",
        make_polygon({{0, 0}, {2, 0}, {2, 2}, {1.2, 2}, {1.2, 1}, {0, 1}},
                     {"A", "B", "C", "D", "E", "F"}));
    std::mt19937_64 rng(corpus_seed);
    for (int i = 0; i < 20; ++i)
        corpus.emplace_back("random-" + std::to_string(i),
                            random_convex_table(rng));

    for (const auto& [name, poly] : corpus) {
        PolygonOracle oracle(poly);
        const AdjacencyResult res = adjacency_pairs(oracle, 6);
        if (res.pairs != true_adjacency(poly))
            return {false, name + ": adjacency mismatch"};
        if (res.cyclic_order.empty())
            return {false, name + ": no cyclic order"};
    }
    return {true, std::to_string(corpus.size()) + " tables exact"};
}

// ------------------------------------------------------------------- 7 --

Outcome criterion7() {
    std::mt19937_64 rng(corpus_seed);
    struct Tri {
        long long a, b, c, q;
        LabeledPolygon poly;
    };
    std::vector<Tri> tris;
    while (tris.size() < 10) {
        const long long q = 7 + static_cast<long long>(rng() % 6);
        const long long a = 1 + static_cast<long long>(rng() % 6);
        const long long b = 1 + static_cast<long long>(rng() % 6);
        const long long c = q - a - b;
        if (c < 1 || c > 6) continue;
        bool ok = true;
        for (const long long x : {a, b, c}) {
            const double th = x * std::numbers::pi / q;
            if (th < 0.36 || th > 1.58) ok = false;  // acute or right corners
        }
        if (!ok) continue;
        const double alpha = c * std::numbers::pi / q;  // at vertex 0
        const double beta = a * std::numbers::pi / q;   // at vertex 1
        const Point2 d0{std::cos(alpha), std::sin(alpha)};
        const Point2 d1{-std::cos(beta), std::sin(beta)};
        const double s = d1.y / cross(d0, d1);
        tris.push_back({a, b, c, q,
                        make_polygon({{0, 0}, {1, 0}, s * d0}, {"A", "B", "C"})});
    }

    std::vector<std::future<std::string>> jobs;
    for (const Tri& t : tris) {
        jobs.push_back(std::async(std::launch::async, [&t]() -> std::string {
            try {
                PolygonOracle oracle(t.poly);
                const LabeledPolygon rec = reconstruct_triangle(oracle, 8);
                const LabeledPolygon truth = normalize(t.poly);
                const auto rec_angles = interior_angles(rec);
                const auto true_angles = interior_angles(truth);
                for (int i = 0; i < 3; ++i) {
                    if (std::abs(rec_angles[i] - true_angles[i]) > 0.02)
                        return "angle " + std::to_string(i);
                    if (dist(rec.vertices[i], truth.vertices[i]) > 0.02)
                        return "vertex " + std::to_string(i);
                }
                return "";
            } catch (const std::exception& e) {
                return e.what();
            }
        }));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const std::string err = jobs[i].get();
        if (!err.empty())
            return {false, "triangle " + std::to_string(i) + " (" +
                               std::to_string(tris[i].a) + "," +
                               std::to_string(tris[i].b) + "," +
                               std::to_string(tris[i].c) + ")/" +
                               std::to_string(tris[i].q) + ": " + err};
    }
    return {true, "10 triangles reconstructed within 0.02"};
}

// ------------------------------------------------------------------- 8 --

Outcome criterion8() {
    const LabeledPolygon sq = unit_square();
    const LanguageTable lang = enumerate_language(sq, 4);
    std::vector<BounceWord> words;
    for (const auto& w : lang.words)
        if (!lang.marginal.count(w)) words.emplace_back(w);
    const ImpossibilityReport rep =
        demonstrate_impossibility(sq, words, 200, corpus_seed);
    if (!rep.all_persist)
        return {false, "persistence failure: " + rep.failure};
    if (rep.persistent_samples != 200) return {false, "sample count"};
    if (!rep.distinct_pair_found) return {false, "no distinct pair"};
    if (rep.distinct_distance <= rep.certificate.epsilon / 2)
        return {false, "distinct pair too close"};
    return {true, std::to_string(words.size()) + " words, 200/200 persist, " +
                      "pair at distance " +
                      std::to_string(rep.distinct_distance)};
}

// ------------------------------------------------------------------- 9 --

Outcome criterion9() {
    const LabeledPolygon sq = unit_square();
    for (const std::size_t k : {2, 5, 10}) {
        std::vector<EdgeLabel> letters;
        for (std::size_t i = 0; i < k; ++i) {
            letters.push_back("B");
            letters.push_back("D");
        }
        const Development dev = develop(sq, BounceWord(letters));
        const Corridor corr = corridor(dev);
        if (!corr.feasible) return {false, "(BD)^" + std::to_string(k)};
        const std::vector<double> angles =
            sample_witness_angles(corr, 1000, corpus_seed);
        const auto [mn, mx] = std::minmax_element(angles.begin(), angles.end());
        const double bound =
            std::atan(2.0 * std::sqrt(2.0) / (2.0 * double(k) - 1.0));
        if (*mx - *mn > bound)
            return {false, "spread " + std::to_string(*mx - *mn) +
                               " exceeds bound " + std::to_string(bound)};
    }
    return {true, "angular spread within bound for k=2,5,10"};
}

// ------------------------------------------------------------------ 10 --

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(BOUNCE_CLI_PATH) + " " + args + " 2>&1";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe))
        out.append(buf, n);
    pclose(pipe);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion10() {
    const std::string dir = "acceptance_tmp";
    std::system(("mkdir -p " + dir).c_str());
    const std::string sq = dir + "/square.json";
    save_polygon_file(unit_square(), sq);
    const std::string words = dir + "/words.txt";
    {
        std::ofstream f(words);
        f << "A,B\nB,D\nA,C,A,C\n";
    }
    const std::vector<std::string> matrix{
        "sturmian --p 3 --q 2",
        "sturmian --p 5 --q 12 --insertions --json",
        "language --table " + sq + " --max-len 3",
        "language --table " + sq + " --max-len 3 --json",
        "trace --table " + sq +
            " --point 0.21,0.37 --angle 0.85 --bounces 12 --svg " + dir +
            "/trace.svg",
        "develop --table " + sq + " --word B,D,B,D --svg " + dir +
            "/dev.svg --json",
        "angle --table " + sq + " --pair A,B --depth 6 --json",
        "adjacency --table " + sq + " --depth 6",
        "perturb --table " + sq + " --words " + words +
            " --count 50 --seed 11 --svg " + dir + "/pert.svg --json",
    };
    const std::vector<std::string> svgs{dir + "/trace.svg", dir + "/dev.svg",
                                        dir + "/pert.svg"};
    std::string first_text, first_svg;
    for (int round = 0; round < 2; ++round) {
        std::string text, svg;
        for (const std::string& m : matrix) text += run_cli(m) + "\x1e";
        for (const std::string& f : svgs) svg += slurp(f) + "\x1e";
        if (round == 0) {
            first_text = text;
            first_svg = svg;
        } else {
            if (text != first_text) return {false, "stdout differs"};
            if (svg != first_svg) return {false, "SVG differs"};
        }
    }
    if (first_text.find("0010100101") == std::string::npos)
        return {false, "sturmian output missing"};
    return {true, "matrix of " + std::to_string(matrix.size()) +
                      " invocations byte-identical"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_sec;
        Outcome (*fn)();
    };
    const std::vector<Criterion> criteria{
        {"1 sturmian golden vectors", 1, criterion1},
        {"2 square language vs sampling", 120, criterion2},
        {"3 rectangle stretch invariance", 300, criterion3},
        {"4 coarse alternation bounds", 120, criterion4},
        {"5 rational angle recovery", 600, criterion5},
        {"6 adjacency reconstruction", 600, criterion6},
        {"7 triangle reconstruction", 600, criterion7},
        {"8 impossibility demonstration", 300, criterion8},
        {"9 direction bound conformance", 60, criterion9},
        {"10 CLI determinism", 600, criterion10},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.fn();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (out.pass && dt > c.budget_sec) {
            out.pass = false;
            out.detail += " (over time budget)";
        }
        std::printf("[%s] criterion %s — %s (%.1fs)\n",
                    out.pass ? "PASS" : "FAIL", c.name, out.detail.c_str(),
                    dt);
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    return failures;
}
