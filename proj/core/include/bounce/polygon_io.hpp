#pragma once

#include <iosfwd>
#include <string>

#include "bounce/geometry.hpp"

namespace bounce {

// Polygon file format: {"vertices": [[x,y],...], "labels": ["A","B",...]}.
// Labels are optional and default to E1..En.
LabeledPolygon load_polygon(std::istream& in);
LabeledPolygon load_polygon_file(const std::string& path);

// Serializes with 17 significant digits so a round trip is value-exact.
std::string polygon_to_json(const LabeledPolygon& poly);
void save_polygon_file(const LabeledPolygon& poly, const std::string& path);

}  // namespace bounce
