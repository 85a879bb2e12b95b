#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "planedraw/drawing.hpp"
#include "planedraw/plane_graph.hpp"
#include "planedraw/verify.hpp"

namespace planedraw::io {

// Parsed form of the text graph format:
//
//   planegraph 1
//   vertices 4
//   rot 0: 1 3 2
//   ...
//   outer 2 1
//   coords exact              (or: coords float 1e-09)
//   v 0 = 2/1 1/1
//   ...
//
// Rationals are "num/den" in lowest terms; `#` starts a comment. Coordinates
// of floating drawings are stored as the exact rational value of each double,
// so parsing loses nothing for either kernel.
struct GraphDocument {
    PlaneGraph graph;
    std::optional<ExactDrawing> exact_coords;
    std::optional<FloatDrawing> float_coords;

    bool has_coords() const { return exact_coords || float_coords; }
};

GraphDocument parse_graph(std::istream& in);
GraphDocument parse_graph(const std::string& text);
GraphDocument load_graph(const std::string& path);  // "-" reads stdin

std::string emit_graph(const PlaneGraph& g);
std::string emit_graph(const PlaneGraph& g, const ExactDrawing& d);
std::string emit_graph(const PlaneGraph& g, const FloatDrawing& d);

std::string report_json(const VerifyReport& report);

}  // namespace planedraw::io
