#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "planedraw/drawing.hpp"
#include "planedraw/geometry.hpp"
#include "planedraw/plane_graph.hpp"

namespace planedraw {

enum class SegmentRelation { disjoint, proper_crossing, touching, collinear_overlap };

// Exact classification of two segments via orientation signs. Symmetric in
// segment order. Requires a != b and c != d.
SegmentRelation segments_intersect(const geom::RatPt& a, const geom::RatPt& b,
                                   const geom::RatPt& c, const geom::RatPt& d);

struct Violation {
    enum class Kind {
        crossing,
        overlap,
        vertex_on_edge,
        coincident,
        rotation_mismatch,
        outer_face_mismatch,
    };

    Kind kind;
    std::array<VertexId, 2> edge_a{-1, -1};
    std::array<VertexId, 2> edge_b{-1, -1};
    VertexId vertex_a = -1;
    VertexId vertex_b = -1;
    std::vector<VertexId> expected;  // rotation or outer walk, as applicable
    std::vector<VertexId> realized;
    std::string witness_x, witness_y;  // crossing point

    std::string describe() const;
    static const char* kind_name(Kind k);
};

struct VerifyReport {
    bool passed = true;
    std::vector<Violation> violations;
};

// Independent certification that a drawing is a straight-line plane drawing
// realizing the graph's embedding. Checks, in order: pairwise-distinct
// vertices, no vertex on a non-incident edge, no crossing between
// independent edges, no overlap between edges sharing an endpoint, clockwise
// angular order at each vertex equal to the rotation system, and the
// geometrically unbounded face equal to the nominated outer face. Brute-force
// pairwise checking; this module is deliberately the simple oracle.
VerifyReport verify(const PlaneGraph& g, const ExactDrawing& drawing);

// Floating variant: the same checks with every sign predicate banded by the
// drawing's tolerance; near-degenerate configurations are reported as
// violations rather than trusted.
VerifyReport verify(const PlaneGraph& g, const FloatDrawing& drawing);

// Neighbours of v sorted by clockwise angle around its point, rotated so the
// smallest id comes first.
std::vector<VertexId> realized_rotation(const PlaneGraph& g, const ExactDrawing& d,
                                        VertexId v);
std::vector<VertexId> realized_rotation(const PlaneGraph& g, const FloatDrawing& d,
                                        VertexId v);

// Local validity check for a freshly placed pair v, w: examines exactly the
// geometry that placing them can change (their edges against everything, the
// affected rotations). Used by the epsilon search; returns a reason when the
// placement is invalid.
std::optional<std::string> star_conflict(const PlaneGraph& g, const ExactDrawing& d,
                                         VertexId v, VertexId w);
std::optional<std::string> star_conflict(const PlaneGraph& g, const FloatDrawing& d,
                                         VertexId v, VertexId w);

}  // namespace planedraw
