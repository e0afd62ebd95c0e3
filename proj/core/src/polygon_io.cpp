#include "bounce/polygon_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bounce {

LabeledPolygon load_polygon(std::istream& in) {
    nlohmann::json j;
    in >> j;
    if (!j.contains("vertices") || !j["vertices"].is_array()) {
        throw std::invalid_argument("polygon file: missing \"vertices\" array");
    }
    std::vector<Point2> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2) {
            throw std::invalid_argument("polygon file: vertex must be [x, y]");
        }
        vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    std::vector<EdgeLabel> labels;
    if (j.contains("labels")) {
        for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
    }
    return make_polygon(std::move(vertices), std::move(labels));
}

LabeledPolygon load_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open polygon file: " + path);
    return load_polygon(in);
}

std::string polygon_to_json(const LabeledPolygon& poly) {
    std::ostringstream out;
    out.precision(17);
    out << "{\"vertices\": [";
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        if (i) out << ", ";
        out << "[" << poly.vertices[i].x << ", " << poly.vertices[i].y << "]";
    }
    out << "], \"labels\": [";
    for (std::size_t i = 0; i < poly.labels.size(); ++i) {
        if (i) out << ", ";
        out << nlohmann::json(poly.labels[i]).dump();
    }
    out << "]}";
    return out.str();
}

void save_polygon_file(const LabeledPolygon& poly, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open polygon file for write: " + path);
    out << polygon_to_json(poly) << "\n";
}

}  // namespace bounce
