// Oracle plumbing, adjacency/angle reconstruction, perturbation persistence.

#include <cmath>
#include <numbers>
#include <sstream>

#include <doctest.h>

#include "bounce/language.hpp"
#include "bounce/oracle.hpp"
#include "bounce/perturbation.hpp"
#include "bounce/reconstruction.hpp"

using namespace bounce;

namespace {

LabeledPolygon unit_square() {
    return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                        {"A", "B", "C", "D"});
}

LabeledPolygon l_shape() {
    return make_polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}},
                        {"A", "B", "C", "D", "E", "F"});
}

}  // namespace

TEST_CASE("polygon oracle agrees with exhaustive enumeration") {
    const LabeledPolygon sq = unit_square();
    const LanguageTable lang = enumerate_language(sq, 4);
    PolygonOracle oracle(sq);
    // Every word over the alphabet up to length 3: membership must agree.
    const auto& abc = lang.alphabet;
    std::vector<std::vector<EdgeLabel>> queue{{}};
    for (int len = 0; len < 3; ++len) {
        std::vector<std::vector<EdgeLabel>> next;
        for (const auto& w : queue)
            for (const auto& x : abc) {
                auto v = w;
                v.push_back(x);
                CHECK(oracle.contains(v) == lang.contains(v));
                next.push_back(std::move(v));
            }
        queue = std::move(next);
    }
}

TEST_CASE("stored oracle replays its word list") {
    StoredOracle oracle({"A", "B"}, {{"A"}, {"B"}, {"A", "B"}});
    CHECK(oracle.contains({"A", "B"}));
    CHECK_FALSE(oracle.contains({"B", "A"}));
    CHECK_FALSE(oracle.contains({"A", "B", "A"}));  // beyond horizon
    const auto ext = oracle.list_extensions({"A"});
    CHECK(ext == std::vector<EdgeLabel>{"B"});
}

TEST_CASE("adjacency reconstruction on square and L-shape") {
    {
        PolygonOracle oracle(unit_square());
        const AdjacencyResult res = adjacency_pairs(oracle, 6);
        const std::vector<std::pair<EdgeLabel, EdgeLabel>> want{
            {"A", "B"}, {"A", "D"}, {"B", "C"}, {"C", "D"}};
        CHECK(res.pairs == want);
        CHECK(res.cyclic_order ==
              std::vector<EdgeLabel>{"A", "B", "C", "D"});
    }
    {
        // The reflex vertex must not join C and D's non-adjacent neighbours.
        PolygonOracle oracle(l_shape());
        const AdjacencyResult res = adjacency_pairs(oracle, 6);
        const auto has = [&](const char* x, const char* y) {
            return std::find(res.pairs.begin(), res.pairs.end(),
                             std::pair<EdgeLabel, EdgeLabel>{x, y}) !=
                   res.pairs.end();
        };
        CHECK(has("C", "D"));
        CHECK_FALSE(has("B", "E"));
        CHECK(res.pairs.size() == 6);
    }
}

TEST_CASE("right-angle detection") {
    PolygonOracle sq(unit_square());
    CHECK(detect_right_angle(sq, "A", "B", 6));
    const LabeledPolygon pent = make_polygon(
        {{0, 0}, {1.3, 0.1}, {1.7, 1.0}, {0.8, 1.6}, {-0.3, 0.9}},
        {"A", "B", "C", "D", "E"});
    PolygonOracle po(pent);
    CHECK_FALSE(detect_right_angle(po, "A", "B", 6));
}

TEST_CASE("matching family for the right angle") {
    PolygonOracle oracle(unit_square());
    const FamilySearchResult res = find_matching_family(oracle, "A", "B", 6);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(res.family->sequences.size() == 2);
    CHECK(res.family->total_insertion == 4);
    for (const SequenceRecord& s : res.family->sequences) {
        CHECK(s.insertion.size() == 2);
        CHECK(s.pre.size() == 6);
        CHECK(s.post.size() == 6);
    }
}

TEST_CASE("matching family at the reflex corner uses empty insertions") {
    PolygonOracle oracle(l_shape());
    const FamilySearchResult res = find_matching_family(oracle, "C", "D", 6);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(res.family->sequences.size() == 6);
    CHECK(res.family->total_insertion == 4);
    int empties = 0;
    for (const SequenceRecord& s : res.family->sequences)
        if (s.insertion.empty()) ++empties;
    CHECK(empties == 2);
}

TEST_CASE("verify_rational_angle accepts truth and rejects mismatches") {
    PolygonOracle sq(unit_square());
    CHECK(verify_rational_angle(sq, "A", "B", 1, 2, 6));
    CHECK_FALSE(verify_rational_angle(sq, "A", "B", 1, 3, 6));
    CHECK_THROWS_AS(verify_rational_angle(sq, "A", "B", 2, 4, 6),
                    std::invalid_argument);

    PolygonOracle ell(l_shape());
    CHECK(verify_rational_angle(ell, "C", "D", 3, 2, 6));
    CHECK_FALSE(verify_rational_angle(ell, "C", "D", 1, 1, 6));
}

TEST_CASE("estimate_angle certifies the equilateral corner") {
    const LabeledPolygon tri = make_polygon(
        {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}}, {"A", "B", "C"});
    PolygonOracle oracle(tri);
    const AngleEstimate est = estimate_angle(oracle, "A", "B", 6);
    CHECK(est.kind == AngleEstimate::Kind::exact_rational);
    CHECK(est.p == 1);
    CHECK(est.q == 3);
    CHECK(est.value == doctest::Approx(std::numbers::pi / 3));
}

TEST_CASE("reconstruct_triangle recovers the 30-60-90 triangle") {
    // Angles pi/2 at v1, pi/6 at v2, pi/3 at v0.
    const LabeledPolygon tri = make_polygon(
        {{0, 0}, {1, 0}, {1, std::tan(std::numbers::pi / 3)}},
        {"A", "B", "C"});
    PolygonOracle oracle(tri);
    const LabeledPolygon rec = reconstruct_triangle(oracle, 8);
    const LabeledPolygon truth = normalize(tri);
    REQUIRE(rec.size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(dist(rec.vertices[i], truth.vertices[i]) < 1e-6);

    StoredOracle two({"A", "B"}, {{"A"}, {"B"}});
    CHECK_THROWS_AS(reconstruct_triangle(two, 4), std::invalid_argument);
}

TEST_CASE("vertex clearance is positive for language members") {
    const LabeledPolygon sq = unit_square();
    for (const char* w : {"A,B", "B,D,B", "A,B,C,D"}) {
        const ClearanceResult c = vertex_clearance(sq, BounceWord::parse(w));
        CHECK(c.delta > 0.0);
    }
}

TEST_CASE("persistence radius: positivity, monotonicity, realization") {
    const LabeledPolygon sq = unit_square();
    const std::vector<BounceWord> small{BounceWord::parse("A,B"),
                                        BounceWord::parse("B,D")};
    std::vector<BounceWord> big = small;
    big.push_back(BounceWord::parse("A,C,A,C"));
    const PersistenceCertificate cs = persistence_radius(sq, small);
    const PersistenceCertificate cb = persistence_radius(sq, big);
    CHECK(cs.epsilon > 0.0);
    CHECK(cb.epsilon > 0.0);
    CHECK(cb.epsilon <= cs.epsilon);

    // Every sampled perturbation inside epsilon still realizes every word.
    const auto samples = sample_perturbed(sq, cb.epsilon, 40, 5);
    REQUIRE(samples.size() == 40);
    for (const LabeledPolygon& q : samples) {
        CHECK(validate(q).valid);
        CHECK(q.labels == sq.labels);
        for (const BounceWord& w : big) CHECK(is_realizable(q, w));
    }
    // Determinism of sampling.
    const auto again = sample_perturbed(sq, cb.epsilon, 40, 5);
    for (std::size_t i = 0; i < 40; ++i)
        for (std::size_t v = 0; v < 4; ++v)
            CHECK(dist(samples[i].vertices[v], again[i].vertices[v]) == 0.0);

    CHECK_THROWS(persistence_radius(sq, {}));
    CHECK_THROWS(persistence_radius(sq, {BounceWord::parse("A,B,A")}));
}

TEST_CASE("impossibility demonstration on a pentagon sample") {
    const LabeledPolygon pent = make_polygon(
        {{0, 0}, {1.3, 0.1}, {1.7, 1.0}, {0.8, 1.6}, {-0.3, 0.9}},
        {"A", "B", "C", "D", "E"});
    const LanguageTable lang = enumerate_language(pent, 3);
    std::vector<BounceWord> words;
    for (const auto& w : lang.words)
        if (w.size() == 3 && !lang.marginal.count(w) && words.size() < 10)
            words.emplace_back(w);
    const ImpossibilityReport rep =
        demonstrate_impossibility(pent, words, 60, 11);
    CHECK(rep.all_persist);
    CHECK(rep.persistent_samples == 60);
    CHECK(rep.distinct_pair_found);
    CHECK(rep.distinct_distance > rep.certificate.epsilon / 2);
}

TEST_CASE("oversized perturbations do break words") {
    // Diagnostic direction: blowing epsilon up far beyond the certificate
    // produces at least one failure, showing the bound is doing work.
    const LabeledPolygon sq = unit_square();
    const std::vector<BounceWord> words{BounceWord::parse("A,C,A,C"),
                                        BounceWord::parse("B,D,B,D")};
    const PersistenceCertificate cert = persistence_radius(sq, words);
    const auto samples = sample_perturbed(sq, cert.epsilon * 100.0, 200, 3);
    bool failure = false;
    for (const LabeledPolygon& q : samples)
        for (const BounceWord& w : words)
            if (!is_realizable(q, w)) failure = true;
    CHECK(failure);
}
