// bounce: command-line front end for the polygonal billiard library.
//
// Subcommands: trace, develop, language, sturmian, angle, adjacency,
// perturb.  All output is deterministic for fixed flags and seed; SVG
// figures use a fixed 1000x1000 canvas with a 5% margin.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bounce/flow.hpp"
#include "bounce/geometry.hpp"
#include "bounce/language.hpp"
#include "bounce/oracle.hpp"
#include "bounce/perturbation.hpp"
#include "bounce/polygon_io.hpp"
#include "bounce/reconstruction.hpp"
#include "bounce/sturmian.hpp"
#include "bounce/svg.hpp"
#include "bounce/unfolding.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_domain_error = 1;
constexpr int exit_usage_error = 2;

struct GlobalOpts {
    double tolerance = 1e-9;
    unsigned long long seed = 0;
    bool quiet = false;
    bool json_mode = false;
};

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

std::string join_word(const std::vector<bounce::EdgeLabel>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += w[i];
    }
    return s;
}

bounce::Point2 parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw CLI::ValidationError("--point", "expected X,Y");
    }
    try {
        return {std::stod(text.substr(0, comma)),
                std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--point", "expected numeric X,Y");
    }
}

std::pair<std::string, std::string> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || comma == 0 ||
        comma + 1 == text.size()) {
        throw CLI::ValidationError("--pair", "expected A,B");
    }
    return {text.substr(0, comma), text.substr(comma + 1)};
}

void emit(const GlobalOpts& g, const json& payload,
          const std::string& text) {
    if (g.json_mode) {
        std::cout << payload.dump(2) << "\n";
    } else if (!g.quiet) {
        std::cout << text;
    }
}

// Oracle selection shared by angle/adjacency: either a hidden polygon table
// or a stored words file.
std::unique_ptr<bounce::SpectrumOracle> make_oracle(
    const std::string& table_path, const std::string& oracle_path) {
    if (!oracle_path.empty()) {
        return std::make_unique<bounce::StoredOracle>(
            bounce::load_stored_oracle(oracle_path));
    }
    return std::make_unique<bounce::PolygonOracle>(
        bounce::load_polygon_file(table_path));
}

std::vector<bounce::BounceWord> load_words_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open words file: " + path);
    std::vector<bounce::BounceWord> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty()) continue;
        words.push_back(bounce::BounceWord::parse(line));
    }
    return words;
}

// ---------------------------------------------------------------- trace --

int cmd_trace(const GlobalOpts& g, const std::string& table_path,
              const std::string& point_text, double angle,
              std::size_t bounces, const std::string& svg_path) {
    const bounce::LabeledPolygon poly = bounce::load_polygon_file(table_path);
    const bounce::Point2 start = parse_point(point_text);
    const bounce::TraceResult res = bounce::trace(poly, start, angle, bounces);

    json out;
    out["word"] = res.word.str();
    out["terminal"] = res.terminal == bounce::TraceResult::Terminal::completed
                          ? "completed"
                          : "singular";
    json impacts = json::array();
    for (const bounce::Point2& p : res.impact_points)
        impacts.push_back({p.x, p.y});
    out["impacts"] = impacts;
    if (res.terminal == bounce::TraceResult::Terminal::singular)
        out["singular_vertex"] = res.singular_vertex;

    std::ostringstream text;
    text << "word: " << res.word.str() << "\n";
    text << "terminal: " << out["terminal"].get<std::string>() << "\n";
    for (const bounce::Point2& p : res.impact_points)
        text << "impact: " << fmt12(p.x) << " " << fmt12(p.y) << "\n";

    if (!svg_path.empty()) {
        std::vector<bounce::Point2> bounds = poly.vertices;
        bounds.push_back(start);
        bounce::SvgCanvas svg(bounds);
        svg.polygon(poly.vertices, "black", "none", 3.0);
        std::vector<bounce::Point2> path{start};
        path.insert(path.end(), res.impact_points.begin(),
                    res.impact_points.end());
        svg.polyline(path, "crimson", 2.0);
        svg.circle(start, 5.0, "navy");
        svg.save(svg_path);
        out["svg"] = svg_path;
    }
    emit(g, out, text.str());
    return exit_ok;
}

// -------------------------------------------------------------- develop --

int cmd_develop(const GlobalOpts& g, const std::string& table_path,
                const std::string& word_text, const std::string& svg_path) {
    const bounce::LabeledPolygon poly = bounce::load_polygon_file(table_path);
    const bounce::BounceWord word = bounce::BounceWord::parse(word_text);
    const bounce::Development dev = bounce::develop(poly, word);
    const bounce::Corridor corr = bounce::corridor(dev);

    json out;
    out["word"] = word.str();
    out["feasible"] = corr.feasible;
    out["copies"] = dev.copies.size();
    std::ostringstream text;
    text << "word: " << word.str() << "\n";
    text << "copies: " << dev.copies.size() << "\n";
    text << "feasible: " << (corr.feasible ? "yes" : "no") << "\n";
    if (corr.feasible) {
        out["width"] = corr.width;
        out["marginal"] = corr.marginal;
        out["witness_angle"] = corr.witness_angle;
        out["witness_point"] = {corr.witness_point.x, corr.witness_point.y};
        out["angle_min"] = corr.angle_min;
        out["angle_max"] = corr.angle_max;
        text << "width: " << fmt12(corr.width) << "\n";
        text << "witness_angle: " << fmt12(corr.witness_angle) << "\n";
        text << "angle_range: [" << fmt12(corr.angle_min) << ", "
             << fmt12(corr.angle_max) << "]\n";
        if (corr.marginal) text << "marginal: yes\n";
    } else if (!corr.diagnostics.empty()) {
        out["diagnostics"] = corr.diagnostics;
        text << "diagnostics: " << corr.diagnostics << "\n";
    }

    if (!svg_path.empty()) {
        std::vector<bounce::Point2> bounds;
        for (const bounce::Isometry2& iso : dev.copies)
            for (const bounce::Point2& v : poly.vertices)
                bounds.push_back(iso.apply(v));
        bounce::SvgCanvas svg(bounds);
        for (const bounce::Isometry2& iso : dev.copies) {
            std::vector<bounce::Point2> copy;
            for (const bounce::Point2& v : poly.vertices)
                copy.push_back(iso.apply(v));
            svg.polygon(copy, "gray", "none", 1.5);
        }
        for (const bounce::Segment& portal : dev.portals)
            svg.line(portal.a, portal.b, "seagreen", 3.0);
        if (corr.feasible) {
            // Extend the witness line across the development's extent.
            double lo = 0.0, hi = 0.0;
            const bounce::Point2 dir{std::cos(corr.witness_angle),
                                     std::sin(corr.witness_angle)};
            for (const bounce::Point2& b : bounds) {
                const double t = dot(b - corr.witness_point, dir);
                lo = std::min(lo, t);
                hi = std::max(hi, t);
            }
            svg.line(corr.witness_point + lo * dir,
                     corr.witness_point + hi * dir, "crimson", 2.0, true);
        }
        svg.save(svg_path);
        out["svg"] = svg_path;
    }
    emit(g, out, text.str());
    return corr.feasible ? exit_ok : exit_domain_error;
}

// ------------------------------------------------------------- language --

int cmd_language(const GlobalOpts& g, const std::string& table_path,
                 std::size_t max_len, const std::string& out_path) {
    const bounce::LabeledPolygon poly = bounce::load_polygon_file(table_path);
    const bounce::LanguageTable table = bounce::enumerate_language(poly, max_len);

    // std::set orders words lexicographically already.
    std::ostringstream listing;
    for (const auto& w : table.words) listing << join_word(w) << "\n";

    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << listing.str();
    }

    json out;
    out["alphabet"] = table.alphabet;
    out["max_len"] = table.max_len;
    out["count"] = table.words.size();
    json words = json::array(), marginal = json::array();
    for (const auto& w : table.words) words.push_back(join_word(w));
    for (const auto& w : table.marginal) marginal.push_back(join_word(w));
    out["words"] = words;
    out["marginal"] = marginal;
    if (!out_path.empty()) out["out"] = out_path;

    emit(g, out, out_path.empty() ? listing.str() : "");
    return exit_ok;
}

// ------------------------------------------------------------- sturmian --

int cmd_sturmian(const GlobalOpts& g, long long p, long long q,
                 bool insertions) {
    const bounce::sturmian::SquareCode code =
        bounce::sturmian::square_bounce_word(p, q);
    json out;
    out["p"] = p;
    out["q"] = q;
    out["word"] = code.word;
    std::ostringstream text;
    text << code.word << "\n";
    if (insertions) {
        const bounce::sturmian::InsertionPattern pat =
            bounce::sturmian::insertion_strings(p, q);
        out["insertions"] = pat.strings;
        out["insertion_lengths"] = pat.lengths;
        for (std::size_t i = 0; i < pat.strings.size(); ++i) {
            text << "in_" << i + 1 << ": "
                 << (pat.strings[i].empty() ? "-" : pat.strings[i])
                 << " (length " << pat.lengths[i] << ")\n";
        }
    }
    emit(g, out, text.str());
    return exit_ok;
}

// ---------------------------------------------------------------- angle --

int cmd_angle(const GlobalOpts& g, const std::string& table_path,
              const std::string& oracle_path, const std::string& pair_text,
              std::size_t depth) {
    const auto oracle = make_oracle(table_path, oracle_path);
    const auto [a, b] = parse_pair(pair_text);
    const bounce::AngleEstimate est = bounce::estimate_angle(*oracle, a, b, depth);

    json out;
    out["pair"] = {a, b};
    out["depth"] = depth;
    out["notes"] = est.notes;
    std::ostringstream text;
    switch (est.kind) {
        case bounce::AngleEstimate::Kind::exact_rational:
            out["kind"] = "exact_rational";
            out["p"] = est.p;
            out["q"] = est.q;
            out["value"] = est.value;
            out["num_sequences"] = est.num_sequences;
            out["total_insertion"] = est.total_insertion;
            text << "exact_rational " << est.p << "/" << est.q << " -> pi*"
                 << est.p << "/" << est.q << " = " << fmt12(est.value)
                 << " rad (" << est.notes << ")\n";
            break;
        case bounce::AngleEstimate::Kind::estimate:
            out["kind"] = "estimate";
            out["value"] = est.value;
            out["num_sequences"] = est.num_sequences;
            out["total_insertion"] = est.total_insertion;
            text << "estimate " << fmt12(est.value) << " rad ("
                 << est.notes << ")\n";
            break;
        case bounce::AngleEstimate::Kind::none:
            out["kind"] = "none";
            text << "none (" << est.notes << ")\n";
            break;
    }
    emit(g, out, text.str());
    return est.kind == bounce::AngleEstimate::Kind::none ? exit_domain_error
                                                         : exit_ok;
}

// ------------------------------------------------------------ adjacency --

int cmd_adjacency(const GlobalOpts& g, const std::string& table_path,
                  const std::string& oracle_path, std::size_t depth) {
    const auto oracle = make_oracle(table_path, oracle_path);
    const bounce::AdjacencyResult res = bounce::adjacency_pairs(*oracle, depth);

    std::vector<std::pair<std::string, std::string>> pairs(res.pairs.begin(),
                                                           res.pairs.end());
    std::sort(pairs.begin(), pairs.end());

    json out;
    out["depth"] = res.depth;
    json jp = json::array();
    std::ostringstream text;
    for (const auto& [x, y] : pairs) {
        jp.push_back({x, y});
        text << x << "-" << y << "\n";
    }
    out["pairs"] = jp;
    out["cyclic_order"] = res.cyclic_order;
    if (!res.cyclic_order.empty()) {
        text << "cyclic_order:";
        for (const auto& l : res.cyclic_order) text << " " << l;
        text << "\n";
    }
    text << "certified to depth " << res.depth << "\n";
    emit(g, out, text.str());
    return exit_ok;
}

// -------------------------------------------------------------- perturb --

int cmd_perturb(const GlobalOpts& g, const std::string& table_path,
                const std::string& words_path, std::size_t count,
                const std::string& svg_path) {
    const bounce::LabeledPolygon poly = bounce::load_polygon_file(table_path);
    const std::vector<bounce::BounceWord> words = load_words_file(words_path);
    const bounce::ImpossibilityReport rep =
        bounce::demonstrate_impossibility(poly, words, count, g.seed);

    json out;
    out["epsilon"] = rep.certificate.epsilon;
    out["delta"] = rep.certificate.delta;
    out["sensitivity"] = rep.certificate.sensitivity;
    out["words"] = words.size();
    out["samples"] = rep.samples;
    out["persistent"] = rep.persistent_samples;
    out["all_persist"] = rep.all_persist;
    out["distinct_pair_found"] = rep.distinct_pair_found;
    if (rep.distinct_pair_found) {
        out["distinct_indices"] = {rep.distinct_i, rep.distinct_j};
        out["distinct_distance"] = rep.distinct_distance;
    }
    if (!rep.failure.empty()) out["failure"] = rep.failure;

    std::ostringstream text;
    text << "epsilon: " << fmt12(rep.certificate.epsilon) << "\n";
    text << "delta: " << fmt12(rep.certificate.delta) << "\n";
    text << "sensitivity: " << fmt12(rep.certificate.sensitivity) << "\n";
    text << "persistent: " << rep.persistent_samples << "/" << rep.samples
         << "\n";
    if (rep.distinct_pair_found) {
        text << "distinct_pair: samples " << rep.distinct_i << ", "
             << rep.distinct_j << " at vertex distance "
             << fmt12(rep.distinct_distance) << "\n";
    }
    if (!rep.failure.empty()) text << "failure: " << rep.failure << "\n";

    if (!svg_path.empty()) {
        std::vector<bounce::Point2> bounds = poly.vertices;
        const auto add = [&](const bounce::LabeledPolygon& q) {
            bounds.insert(bounds.end(), q.vertices.begin(), q.vertices.end());
        };
        if (rep.distinct_pair_found) {
            add(rep.sampled[rep.distinct_i]);
            add(rep.sampled[rep.distinct_j]);
        }
        bounce::SvgCanvas svg(bounds);
        svg.polygon(poly.vertices, "black", "none", 3.0);
        if (rep.distinct_pair_found) {
            svg.polygon(rep.sampled[rep.distinct_i].vertices, "crimson",
                        "none", 1.5);
            svg.polygon(rep.sampled[rep.distinct_j].vertices, "royalblue",
                        "none", 1.5);
        }
        svg.save(svg_path);
        out["svg"] = svg_path;
    }
    emit(g, out, text.str());
    return rep.all_persist ? exit_ok : exit_domain_error;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic dynamics of polygonal billiards"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--tolerance", g.tolerance,
                   "Geometric tolerance for reporting (reserved)");
    app.add_option("--seed", g.seed, "Random seed for sampling subcommands");
    app.add_flag("--quiet", g.quiet, "Suppress text output");
    app.add_flag("--json", g.json_mode, "Machine-readable JSON output");

    std::string table, point_text = "0.25,0.25", word_text, svg_path,
                out_path, oracle_path, words_path, pair_text;
    double angle = 1.0;
    std::size_t bounces = 10, max_len = 4, depth = 6, count = 100;
    long long p = 1, q = 2;
    bool insertions = false;

    CLI::App* trace = app.add_subcommand("trace", "Trace a billiard word");
    trace->add_option("--table", table, "Polygon JSON file")->required();
    trace->add_option("--point", point_text, "Start point X,Y")->required();
    trace->add_option("--angle", angle, "Direction in radians")->required();
    trace->add_option("--bounces", bounces, "Number of reflections")->required();
    trace->add_option("--svg", svg_path, "Write SVG figure");

    CLI::App* develop = app.add_subcommand("develop", "Unfold a word");
    develop->add_option("--table", table, "Polygon JSON file")->required();
    develop->add_option("--word", word_text, "Comma-separated word")->required();
    develop->add_option("--svg", svg_path, "Write SVG figure");

    CLI::App* language = app.add_subcommand("language", "Enumerate the bounce language");
    language->add_option("--table", table, "Polygon JSON file")->required();
    language->add_option("--max-len", max_len, "Maximum word length")->required();
    language->add_option("--out", out_path, "Write words file");

    CLI::App* sturmian = app.add_subcommand("sturmian", "Square-table code for slope p/q");
    sturmian->add_option("--p", p, "Numerator")->required();
    sturmian->add_option("--q", q, "Denominator")->required();
    sturmian->add_flag("--insertions", insertions, "Print insertion table");

    CLI::App* angle_cmd = app.add_subcommand("angle", "Estimate a corner angle from the oracle");
    angle_cmd->add_option("--table", table, "Polygon JSON file");
    angle_cmd->add_option("--oracle-from", oracle_path, "Stored words file");
    angle_cmd->add_option("--pair", pair_text, "Edge pair A,B")->required();
    angle_cmd->add_option("--depth", depth, "Matching depth")->required();

    CLI::App* adjacency = app.add_subcommand("adjacency", "Reconstruct edge adjacency from the oracle");
    adjacency->add_option("--table", table, "Polygon JSON file");
    adjacency->add_option("--oracle-from", oracle_path, "Stored words file");
    adjacency->add_option("--depth", depth, "Witness depth")->required();

    CLI::App* perturb = app.add_subcommand("perturb", "Word persistence under perturbation");
    perturb->add_option("--table", table, "Polygon JSON file")->required();
    perturb->add_option("--words", words_path, "Words file")->required();
    perturb->add_option("--count", count, "Number of samples")->required();

    perturb->add_option("--svg", svg_path, "Write SVG figure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage_error;
    }

    try {
        if (app.got_subcommand(trace))
            return cmd_trace(g, table, point_text, angle, bounces, svg_path);
        if (app.got_subcommand(develop))
            return cmd_develop(g, table, word_text, svg_path);
        if (app.got_subcommand(language))
            return cmd_language(g, table, max_len, out_path);
        if (app.got_subcommand(sturmian))
            return cmd_sturmian(g, p, q, insertions);
        if (app.got_subcommand(angle_cmd)) {
            if (table.empty() && oracle_path.empty()) {
                std::cerr << "angle: need --table or --oracle-from\n";
                return exit_usage_error;
            }
            return cmd_angle(g, table, oracle_path, pair_text, depth);
        }
        if (app.got_subcommand(adjacency)) {
            if (table.empty() && oracle_path.empty()) {
                std::cerr << "adjacency: need --table or --oracle-from\n";
                return exit_usage_error;
            }
            return cmd_adjacency(g, table, oracle_path, depth);
        }
        if (app.got_subcommand(perturb))
            return cmd_perturb(g, table, words_path, count, svg_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain_error;
    }
    return exit_usage_error;
}
