#include "bounce/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bounce/sturmian.hpp"

namespace bounce {

namespace {

using Word = std::vector<EdgeLabel>;

// Search budgets: large enough for the test corpus, small enough to fail
// fast on degenerate oracles.
constexpr std::size_t adjacency_node_budget = 4000000;
constexpr std::size_t grazing_cert_budget = 2000000;
constexpr std::size_t adjacency_extension_depth = 40;
constexpr std::size_t grazing_tail_depth = 16;
constexpr std::size_t family_node_budget = 400000;
constexpr std::size_t family_verify_budget = 2000000;
// Matching depth at which a candidate rational angle is certified.  Word
// families of nearby wrong rationals close at shallow depths (the matching
// slop absorbs their closure defect) but pinch off as the matching deepens;
// the certification depth must exceed the deepest such impostor for the
// denominators in scope.
constexpr std::size_t family_verify_depth = 24;
constexpr std::size_t angle_quick_depth = 3;
constexpr std::size_t angle_mid_depth = 12;
constexpr std::size_t angle_estimate_depth = 20;
constexpr long long angle_pmax = 6;
constexpr std::size_t right_angle_node_budget = 100000;
constexpr std::size_t max_chain_length = 64;
constexpr std::size_t max_alternation_cap = 64;

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Branch certificate: evidence that the deep witness family of {a, b}
// abuts a trajectory through a vertex.  Writing E_0 for one pair element
// and G for the other, the deep tail v = (E_1..E_T) is walked backward by
// extending rev(v).E_0 forward (the language is closed under reversal, so
// each query keeps the whole tail pinned).  Along a backward head
// z = (E_{-1}..E_{-j}), a letter F outside {E_0, E_1, G} is "alive" when
// (E_{-j}..E_{-1}, E_0, F) is in the language, i.e. the blocked branch of
// the grazed trajectory is still emitted from the same backward head.  The
// pair is flagged when some F stays alive to tail depth k on a pinned head,
// or when every pinned head dies while branch letters remain alive (the
// family is too thin to extend backward, which is itself graze evidence).
bool branch_certificate(const SpectrumOracle& oracle, const Word& v,
                        const EdgeLabel& a, const EdgeLabel& b,
                        const std::vector<EdgeLabel>& alphabet, std::size_t k,
                        std::size_t& budget) {
    for (const EdgeLabel* e0 : {&a, &b}) {
        const EdgeLabel& g = (*e0 == a) ? b : a;
        std::vector<EdgeLabel> cand;
        for (const EdgeLabel& f : alphabet)
            if (f != *e0 && f != v.front() && f != g) cand.push_back(f);
        if (cand.empty()) continue;
        Word base = reversed(v);
        base.push_back(*e0);
        Word z;  // backward head in reversed orientation
        auto alive_ok = [&](const EdgeLabel& f) {
            Word q = reversed(z);
            q.push_back(*e0);
            q.push_back(f);
            if (budget) --budget;
            return budget && oracle.contains(q);
        };
        auto dfs = [&](auto&& self, std::vector<EdgeLabel> alive) -> bool {
            std::vector<EdgeLabel> next_alive;
            for (const EdgeLabel& f : alive)
                if (alive_ok(f)) next_alive.push_back(f);
            if (next_alive.empty()) return false;
            if (z.size() == k) return true;
            if (budget == 0) return false;
            bool extended = false;
            for (const EdgeLabel& e : alphabet) {
                if (e == (z.empty() ? *e0 : z.back())) continue;
                z.push_back(e);
                const Word bz = concat(base, z);
                if (budget) --budget;
                const bool in = budget && oracle.contains(bz);
                const bool hit = in && self(self, next_alive);
                if (in) extended = true;
                z.pop_back();
                if (hit) return true;
            }
            return !extended;
        };
        if (dfs(dfs, cand)) return true;
    }
    return false;
}

// Depth-first search for a common-extension witness of {a, b} that survives
// the finite-depth grazing filter.  A depth-d witness w must
//   - use more than two distinct letters (two-letter witnesses live in a
//     periodic cylinder whose boundary grazes both pair elements),
//   - extend jointly to depth T: some u with a.w.u and b.w.u both in the
//     language at every step (spurious common-prefix families in general
//     position pinch off under joint extension; vertex families never do),
//   - have a deep tail v = w.u whose emitter set is pinned to the pair:
//     no letter X outside {a, b} has X.v in the language (a grazed vertex
//     keeps a third emitter on the crossing line alive at every depth),
//   - pass the branch certificate above.
bool has_nongrazing_witness(const SpectrumOracle& oracle, const EdgeLabel& a,
                            const EdgeLabel& b, std::size_t depth) {
    const std::vector<EdgeLabel> alphabet = oracle.alphabet();
    std::size_t budget = adjacency_node_budget;
    std::size_t cert_budget = grazing_cert_budget;
    const std::size_t T = adjacency_extension_depth;
    Word w;
    auto ext_dfs = [&](auto&& self, Word& av, Word& bv, std::size_t t) -> bool {
        if (t == T) {
            Word v(av.begin() + 1, av.end());
            for (const EdgeLabel& x : alphabet) {
                if (x == a || x == b || x == v.front()) continue;
                Word xv{x};
                xv.insert(xv.end(), v.begin(), v.end());
                if (budget) --budget;
                if (oracle.contains(xv)) return false;
            }
            return !branch_certificate(oracle, v, a, b, alphabet,
                                       grazing_tail_depth, cert_budget);
        }
        if (budget == 0) return false;
        for (const EdgeLabel& e : alphabet) {
            if (e == av.back()) continue;
            av.push_back(e);
            bv.push_back(e);
            if (budget) --budget;
            const bool ok = budget && oracle.contains(av) &&
                            oracle.contains(bv) && self(self, av, bv, t + 1);
            av.pop_back();
            bv.pop_back();
            if (ok) return true;
        }
        return false;
    };
    auto dfs = [&](auto&& self) -> bool {
        if (w.size() == depth) {
            const std::set<EdgeLabel> letters(w.begin(), w.end());
            if (letters.size() <= 2) return false;
            Word av{a}, bv{b};
            av.insert(av.end(), w.begin(), w.end());
            bv.insert(bv.end(), w.begin(), w.end());
            return ext_dfs(ext_dfs, av, bv, 0);
        }
        for (const EdgeLabel& e : alphabet) {
            if (!w.empty() && e == w.back()) continue;
            if (w.empty() && (e == a || e == b)) continue;
            w.push_back(e);
            Word aw{a}, bw{b};
            aw.insert(aw.end(), w.begin(), w.end());
            bw.insert(bw.end(), w.begin(), w.end());
            const bool ok = oracle.contains(aw) && oracle.contains(bw) &&
                            self(self);
            w.pop_back();
            if (ok) return true;
        }
        return false;
    };
    return dfs(dfs);
}

std::size_t oracle_max_alternation(const SpectrumOracle& oracle,
                                   const EdgeLabel& a, const EdgeLabel& b) {
    auto alt = [&](const EdgeLabel& first, const EdgeLabel& second,
                   std::size_t len) {
        Word w;
        for (std::size_t i = 0; i < len; ++i)
            w.push_back(i % 2 == 0 ? first : second);
        return w;
    };
    std::size_t k = 0;
    for (std::size_t len = 1; len <= max_alternation_cap; ++len) {
        if (oracle.contains(alt(a, b, len)) || oracle.contains(alt(b, a, len))) {
            k = len;
        } else {
            break;
        }
    }
    return k;
}

struct FamilySearcher {
    const SpectrumOracle& oracle;
    EdgeLabel a, b;
    std::size_t depth;
    std::size_t k = 0;
    std::vector<EdgeLabel> alphabet;
    std::size_t nodes = 0;
    std::size_t node_budget = family_node_budget;
    bool exhausted = false;
    std::vector<SequenceRecord> chain;
    // When set, insertion lengths are prescribed: link i of the chain must
    // have length pattern[(rotation + i) % pattern.size()], and the cycle
    // must close at exactly pattern.size() sequences.
    const std::vector<int>* pattern = nullptr;
    std::size_t rotation = 0;

    EdgeLabel other(const EdgeLabel& x) const { return x == a ? b : a; }

    Word alternating(const EdgeLabel& start, std::size_t len) const {
        Word w;
        EdgeLabel c = start;
        for (std::size_t i = 0; i < len; ++i) {
            w.push_back(c);
            c = other(c);
        }
        return w;
    }

    bool budget_ok() {
        if (++nodes > node_budget) {
            exhausted = true;
            return false;
        }
        return true;
    }

    // Letter the next insertion must start with, given the chain so far.
    EdgeLabel next_start_letter() const {
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            if (!it->insertion.empty()) return other(it->insertion.back());
        }
        return b;  // convention: the first nonempty insertion starts with b
    }

    std::size_t chain_cap = max_chain_length;

    bool closes_cycle(const SequenceRecord& last) const {
        if (chain.empty()) return false;
        const SequenceRecord& first = chain.front();
        if (reversed(last.post) != first.pre) return false;
        // Insertion alternation must continue across the seam.
        EdgeLabel seam = b;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            if (!it->insertion.empty()) {
                seam = other(it->insertion.back());
                break;
            }
        }
        if (first.insertion.empty() || first.insertion.front() != seam)
            return false;
        if (pattern) return chain.size() == pattern->size();
        const std::size_t m = chain.size();
        std::size_t total = 0;
        for (const auto& s : chain) total += s.insertion.size();
        return m >= 2 && m % 2 == 0 && total % 2 == 0;
    }

    // Extend `post` of the sequence under construction one letter at a time,
    // then recurse into the next link of the chain.
    bool grow_post(SequenceRecord& rec, const Word& stem) {
        if (!budget_ok()) return false;
        if (rec.post.size() == depth) {
            chain.push_back(rec);
            if (closes_cycle(chain.back())) return true;
            if (chain.size() < chain_cap && next_sequence()) return true;
            chain.pop_back();
            return false;
        }
        for (const EdgeLabel& e : alphabet) {
            if (rec.post.empty()) {
                // Maximality: the insertion block must not extend.
                if (e == a || e == b) continue;
                if (rec.insertion.empty() && !rec.pre.empty() &&
                    e == rec.pre.back())
                    continue;
            } else if (e == rec.post.back()) {
                continue;
            }
            rec.post.push_back(e);
            Word word = stem;
            word.insert(word.end(), rec.post.begin(), rec.post.end());
            if (oracle.contains(word) && grow_post(rec, stem)) return true;
            rec.post.pop_back();
            if (exhausted) return false;
        }
        return false;
    }

    // Build the next sequence of the chain: its pre is forced (reversed post
    // of the previous sequence); try the admissible insertion lengths.
    bool next_sequence() {
        if (!budget_ok()) return false;
        const SequenceRecord& prev = chain.back();
        const Word pre = reversed(prev.post);
        if (!oracle.contains(pre)) return false;
        const EdgeLabel start = next_start_letter();
        std::vector<std::size_t> lens;
        if (pattern) {
            lens = {static_cast<std::size_t>(
                (*pattern)[(rotation + chain.size()) % pattern->size()])};
        } else {
            lens = {k, k - 1};
        }
        for (const std::size_t len : lens) {
            SequenceRecord rec;
            rec.pre = pre;
            rec.insertion = alternating(start, len);
            const Word stem = concat(rec.pre, rec.insertion);
            if (len > 0 && !oracle.contains(stem)) continue;
            if (grow_post(rec, stem)) return true;
            if (exhausted) return false;
        }
        return false;
    }

    // Anchor sequence: insertion of full length k; search pre backward and
    // post forward.
    bool grow_anchor_pre(SequenceRecord& rec) {
        if (!budget_ok()) return false;
        if (rec.pre.size() == depth) {
            const Word stem = concat(rec.pre, rec.insertion);
            return grow_post(rec, stem);
        }
        for (const EdgeLabel& e : alphabet) {
            if (rec.pre.empty()) {
                if (e == a || e == b) continue;  // maximality before the block
            } else if (e == rec.pre.front()) {
                continue;
            }
            rec.pre.insert(rec.pre.begin(), e);
            Word word = concat(rec.pre, rec.insertion);
            if (oracle.contains(word) && grow_anchor_pre(rec)) return true;
            rec.pre.erase(rec.pre.begin());
            if (exhausted) return false;
        }
        return false;
    }

    FamilySearchResult run() {
        FamilySearchResult out;
        k = oracle_max_alternation(oracle, a, b);
        if (k == 0) return out;
        // Iterative deepening on the cycle length: a long spurious chain must
        // not shadow a genuine small family, so the smallest closed cycle is
        // searched for first.
        bool any_exhausted = false;
        for (std::size_t cap = 2; cap <= max_chain_length; cap += 2) {
            for (const EdgeLabel& start : {b, a}) {
                SequenceRecord rec;
                rec.insertion = alternating(start, k);
                if (!oracle.contains(rec.insertion)) continue;
                chain.clear();
                nodes = 0;
                exhausted = false;
                chain_cap = cap;
                if (!grow_anchor_pre(rec)) {
                    any_exhausted = any_exhausted || exhausted;
                    continue;
                }
                out.status = SearchStatus::found;
                out.family = build_family();
                return out;
            }
        }
        if (any_exhausted) out.status = SearchStatus::budget_exhausted;
        return out;
    }

    // Prescribed-pattern mode: search for a closed family whose insertion
    // lengths follow `pattern` cyclically.  The anchor sequence carries a
    // maximal-length insertion, which fixes the anchor rotation of the
    // cyclic pattern.
    FamilySearchResult run_prescribed() {
        FamilySearchResult out;
        const std::size_t m = pattern->size();
        const int maxlen =
            *std::max_element(pattern->begin(), pattern->end());
        bool any_exhausted = false;
        for (std::size_t r = 0; r < m; ++r) {
            if ((*pattern)[r] != maxlen) continue;
            for (const EdgeLabel& start : {b, a}) {
                SequenceRecord rec;
                rec.insertion =
                    alternating(start, static_cast<std::size_t>(maxlen));
                if (!oracle.contains(rec.insertion)) continue;
                chain.clear();
                nodes = 0;
                exhausted = false;
                chain_cap = m;
                rotation = r;
                if (!grow_anchor_pre(rec)) {
                    any_exhausted = any_exhausted || exhausted;
                    continue;
                }
                out.status = SearchStatus::found;
                out.family = build_family();
                return out;
            }
        }
        if (any_exhausted) out.status = SearchStatus::budget_exhausted;
        return out;
    }

    MatchingFamily build_family() const {
        MatchingFamily fam;
        fam.a = a;
        fam.b = b;
        fam.depth = depth;
        fam.sequences = chain;
        for (const auto& s : chain) {
            fam.insertion_lengths.push_back(
                static_cast<int>(s.insertion.size()));
            fam.total_insertion += s.insertion.size();
        }
        return fam;
    }
};

bool cyclically_equal(const std::vector<int>& x, const std::vector<int>& y) {
    if (x.size() != y.size()) return false;
    const std::size_t n = x.size();
    for (std::size_t r = 0; r < n; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (x[(i + r) % n] != y[i]) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

FamilySearchResult run_family_search(const SpectrumOracle& oracle,
                                     const EdgeLabel& a, const EdgeLabel& b,
                                     std::size_t depth,
                                     const std::vector<int>* pattern,
                                     std::size_t node_budget) {
    FamilySearcher searcher{oracle, a, b, depth};
    searcher.alphabet = oracle.alphabet();
    std::sort(searcher.alphabet.begin(), searcher.alphabet.end());
    searcher.node_budget = node_budget;
    searcher.pattern = pattern;
    if (pattern) {
        searcher.k = oracle_max_alternation(oracle, a, b);
        return searcher.run_prescribed();
    }
    return searcher.run();
}

MatchingFamily truncate_family(const MatchingFamily& fam, std::size_t depth) {
    MatchingFamily out = fam;
    out.depth = depth;
    for (SequenceRecord& s : out.sequences) {
        if (s.pre.size() > depth)
            s.pre = Word(s.pre.end() - static_cast<std::ptrdiff_t>(depth),
                         s.pre.end());
        if (s.post.size() > depth) s.post.resize(depth);
    }
    return out;
}

struct PairAnalysis {
    SearchStatus status = SearchStatus::not_found;
    bool certified = false;     // a candidate rational survived deep matching
    long long p = 0, q = 0;     // set when certified
    MatchingFamily family;      // at the analysis depth (>= requested depth)
};

// Scan candidate rational angles pi*p/q consistent with the pair's maximal
// alternation (q/p in [k-1, k]), in order of increasing p then q.  Each
// candidate's Sturmian insertion pattern is screened by a shallow
// prescribed-pattern search and certified by one at family_verify_depth,
// where word families of wrong nearby rationals have pinched off.  When no
// candidate certifies (irrational or out-of-range angle), fall back to the
// free search at angle_estimate_depth: the smallest surviving cycle there
// belongs to a close rational approximant of the true angle.
PairAnalysis analyze_pair(const SpectrumOracle& oracle, const EdgeLabel& a,
                          const EdgeLabel& b, std::size_t depth) {
    PairAnalysis out;
    const std::size_t k = oracle_max_alternation(oracle, a, b);
    if (k == 0) return out;
    const std::size_t verify_depth =
        std::max<std::size_t>(family_verify_depth, depth);
    bool any_exhausted = false;
    for (long long p = 1; p <= angle_pmax; ++p) {
        const long long qlo =
            std::max<long long>(1, static_cast<long long>(k - 1) * p);
        const long long qhi = static_cast<long long>(k) * p;
        for (long long q = qlo; q <= qhi; ++q) {
            if (std::gcd(p, q) != 1) continue;
            if (p == q || p >= 2 * q) continue;  // angle must be in (0, 2pi)
            const sturmian::InsertionPattern pat =
                sturmian::insertion_strings(p, q);
            bool screened_out = false;
            for (const std::size_t sd : {angle_quick_depth, angle_mid_depth}) {
                const FamilySearchResult screen = run_family_search(
                    oracle, a, b, sd, &pat.lengths, family_node_budget);
                if (screen.status != SearchStatus::found) {
                    any_exhausted =
                        any_exhausted ||
                        screen.status == SearchStatus::budget_exhausted;
                    screened_out = true;
                    break;
                }
            }
            if (screened_out) continue;
            const FamilySearchResult deep =
                run_family_search(oracle, a, b, verify_depth, &pat.lengths,
                                  family_verify_budget);
            if (deep.status == SearchStatus::found) {
                out.status = SearchStatus::found;
                out.certified = true;
                out.p = p;
                out.q = q;
                out.family = *deep.family;
                return out;
            }
            any_exhausted = any_exhausted ||
                            deep.status == SearchStatus::budget_exhausted;
        }
    }
    const FamilySearchResult free_res = run_family_search(
        oracle, a, b, std::max<std::size_t>(angle_estimate_depth, depth),
        nullptr, family_node_budget);
    if (free_res.status == SearchStatus::found) {
        out.status = SearchStatus::found;
        out.family = *free_res.family;
    } else if (any_exhausted ||
               free_res.status == SearchStatus::budget_exhausted) {
        out.status = SearchStatus::budget_exhausted;
    }
    return out;
}

}  // namespace

AdjacencyResult adjacency_pairs(const SpectrumOracle& oracle, std::size_t depth) {
    if (depth < 2) throw std::invalid_argument("adjacency_pairs: depth < 2");
    std::vector<EdgeLabel> alphabet = oracle.alphabet();
    std::sort(alphabet.begin(), alphabet.end());
    AdjacencyResult result;
    result.depth = depth;
    std::map<EdgeLabel, std::vector<EdgeLabel>> partners;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        for (std::size_t j = i + 1; j < alphabet.size(); ++j) {
            if (has_nongrazing_witness(oracle, alphabet[i], alphabet[j], depth)) {
                result.pairs.emplace_back(alphabet[i], alphabet[j]);
                partners[alphabet[i]].push_back(alphabet[j]);
                partners[alphabet[j]].push_back(alphabet[i]);
            }
        }
    }
    // Assemble the cyclic order when the adjacency graph is a single cycle.
    if (partners.size() == alphabet.size()) {
        bool two_regular = true;
        for (const auto& [label, nbrs] : partners) {
            if (nbrs.size() != 2) two_regular = false;
        }
        if (two_regular) {
            std::vector<EdgeLabel> order{alphabet.front()};
            EdgeLabel prev = alphabet.front();
            EdgeLabel cur = std::min(partners[prev][0], partners[prev][1]);
            while (cur != order.front() && order.size() <= alphabet.size()) {
                order.push_back(cur);
                const auto& nbrs = partners[cur];
                const EdgeLabel next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
                prev = cur;
                cur = next;
            }
            if (order.size() == alphabet.size()) result.cyclic_order = order;
        }
    }
    return result;
}

bool detect_right_angle(const SpectrumOracle& oracle, const EdgeLabel& a,
                        const EdgeLabel& b, std::size_t depth) {
    if (!oracle.contains({a, b})) return false;
    const std::vector<EdgeLabel> alphabet = oracle.alphabet();
    std::size_t nodes = 0;
    Word chain;  // E_1 .. E_n
    auto word_of = [&]() {
        Word w(chain.rbegin(), chain.rend());
        w.push_back(a);
        w.push_back(b);
        w.insert(w.end(), chain.begin(), chain.end());
        return w;
    };
    auto dfs = [&](auto&& self) -> bool {
        if (chain.size() == depth) return true;
        if (nodes++ > right_angle_node_budget) return false;
        for (const EdgeLabel& e : alphabet) {
            if (chain.empty() && (e == a || e == b)) continue;
            if (!chain.empty() && e == chain.back()) continue;
            chain.push_back(e);
            if (oracle.contains(word_of()) && self(self)) return true;
            chain.pop_back();
        }
        return false;
    };
    return dfs(dfs);
}

FamilySearchResult find_matching_family(const SpectrumOracle& oracle,
                                        const EdgeLabel& a, const EdgeLabel& b,
                                        std::size_t depth) {
    const PairAnalysis analysis = analyze_pair(oracle, a, b, depth);
    FamilySearchResult out;
    out.status = analysis.status;
    if (analysis.status == SearchStatus::found) {
        out.family = truncate_family(analysis.family, depth);
    }
    return out;
}

bool verify_rational_angle(const SpectrumOracle& oracle, const EdgeLabel& a,
                           const EdgeLabel& b, long long p, long long q,
                           std::size_t depth) {
    if (std::gcd(p, q) != 1) {
        throw std::invalid_argument("verify_rational_angle: p, q not coprime");
    }
    if (p <= 0 || q <= 0 || p == q || p >= 2 * q) return false;
    const sturmian::InsertionPattern pattern = sturmian::insertion_strings(p, q);
    // A family of the prescribed Sturmian pattern must close at every depth
    // up to the requested one; searching at max(depth, family_verify_depth)
    // also rules out nearby rational impostors whose word-level families
    // survive shallow matching but pinch off deeper.
    const std::size_t deep = std::max<std::size_t>(depth, family_verify_depth);
    for (const std::size_t n : {depth, deep}) {
        const FamilySearchResult res = run_family_search(
            oracle, a, b, n, &pattern.lengths, family_verify_budget);
        if (res.status == SearchStatus::budget_exhausted) {
            throw std::runtime_error(
                "verify_rational_angle: search budget exhausted");
        }
        if (res.status != SearchStatus::found) return false;
        if (n == deep) break;
    }
    return true;
}

AngleEstimate estimate_angle(const SpectrumOracle& oracle, const EdgeLabel& a,
                             const EdgeLabel& b, std::size_t depth) {
    AngleEstimate est;
    est.a = a;
    est.b = b;
    const PairAnalysis analysis = analyze_pair(oracle, a, b, depth);
    if (analysis.status != SearchStatus::found) {
        est.kind = AngleEstimate::Kind::none;
        est.notes = analysis.status == SearchStatus::budget_exhausted
                        ? "search budget exhausted before any family closed"
                        : "no matching family found";
        return est;
    }
    est.num_sequences = analysis.family.sequences.size();
    est.total_insertion = analysis.family.total_insertion;
    est.depth = analysis.family.depth;
    if (analysis.certified) {
        est.kind = AngleEstimate::Kind::exact_rational;
        est.p = analysis.p;
        est.q = analysis.q;
        est.value = std::numbers::pi * static_cast<double>(est.p) /
                    static_cast<double>(est.q);
        est.notes = "Sturmian family certified to matching depth " +
                    std::to_string(analysis.family.depth);
    } else {
        est.kind = AngleEstimate::Kind::estimate;
        est.value = std::numbers::pi * static_cast<double>(est.num_sequences) /
                    static_cast<double>(est.total_insertion);
        est.notes = "uncertified family at matching depth " +
                    std::to_string(analysis.family.depth);
    }
    return est;
}

LabeledPolygon reconstruct_triangle(const SpectrumOracle& oracle,
                                    std::size_t depth) {
    std::vector<EdgeLabel> alphabet = oracle.alphabet();
    if (alphabet.size() != 3) {
        throw std::invalid_argument("reconstruct_triangle: alphabet must have 3 labels");
    }
    std::sort(alphabet.begin(), alphabet.end());
    double angles[3];
    for (int i = 0; i < 3; ++i) {
        const AngleEstimate est =
            estimate_angle(oracle, alphabet[i], alphabet[(i + 1) % 3], depth);
        if (est.kind == AngleEstimate::Kind::none) {
            throw std::runtime_error("reconstruct_triangle: angle estimate failed for " +
                                     alphabet[i] + "," + alphabet[(i + 1) % 3]);
        }
        angles[i] = est.value;
    }
    const double sum = angles[0] + angles[1] + angles[2];
    if (std::abs(sum - std::numbers::pi) > 0.05) {
        throw std::runtime_error("reconstruct_triangle: angles sum to " +
                                 std::to_string(sum) + ", expected pi");
    }
    for (double& x : angles) x *= std::numbers::pi / sum;

    // Edges in cyclic order: alphabet[0] from v0 to v1, alphabet[1] from v1
    // to v2, alphabet[2] from v2 to v0; angles[i] sits between edges i, i+1.
    const double at_v1 = angles[0];  // between edge 0 and edge 1
    const double at_v0 = angles[2];  // between edge 2 and edge 0
    const Point2 v0{0.0, 0.0}, v1{1.0, 0.0};
    const Point2 d0{std::cos(at_v0), std::sin(at_v0)};
    const Point2 d1{-std::cos(at_v1), std::sin(at_v1)};
    // Intersect v0 + s*d0 with v1 + t*d1.
    const double denom = cross(d0, d1);
    const double s = cross(v1 - v0, d1) / denom;
    const Point2 v2 = v0 + s * d0;
    return normalize(make_polygon({v0, v1, v2}, alphabet));
}

}  // namespace bounce
