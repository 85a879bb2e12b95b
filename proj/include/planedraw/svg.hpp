#pragma once

#include <string>

#include "planedraw/drawing.hpp"
#include "planedraw/plane_graph.hpp"
#include "planedraw/verify.hpp"

namespace planedraw::io {

struct SvgOptions {
    double width = 800;
    double height = 800;
    double margin = 48;
    double vertex_radius = 4;
    bool labels = true;
};

// Renders vertices as circles and edges as line segments, affinely scaled to
// the viewport with the y axis flipped for screen convention. When a failed
// report is passed, offending edges and vertices get a distinct class
// ("bad"). Presentation only; the graph file remains the source of truth.
std::string emit_svg(const PlaneGraph& g, const ExactDrawing& d,
                     const SvgOptions& options = {},
                     const VerifyReport* report = nullptr);
std::string emit_svg(const PlaneGraph& g, const FloatDrawing& d,
                     const SvgOptions& options = {},
                     const VerifyReport* report = nullptr);

}  // namespace planedraw::io
