#pragma once

#include <array>
#include <utility>
#include <vector>

#include "planedraw/plane_graph.hpp"

namespace planedraw {

// A 3-cycle of a triangulation that is not a face boundary; it has at least
// one vertex strictly inside and one strictly outside.
struct SeparatingTriangle {
    std::array<VertexId, 3> cycle;     // ascending
    std::vector<VertexId> interior;    // ascending, nonempty
};

// Everything needed to undo one edge contraction, combinatorially and
// geometrically. In the pre-contraction graph the clockwise rotations read
//   rotation(v) = (p, w, q, x1..xk)   and   rotation(w) = (q, v, p, y1..yl),
// and after contracting vw into s (which reuses v's id) the rotation of s is
//   rotation(s) = (p, y1..yl, q, x1..xk).
struct ContractionRecord {
    VertexId s = -1;
    VertexId v = -1;
    VertexId w = -1;
    VertexId p = -1;
    VertexId q = -1;
    std::vector<VertexId> xs;
    std::vector<VertexId> ys;
};

// A full reduction of a triangulation down to a triangle. Applying the
// records in reverse, starting from base, reconstructs the input exactly.
struct ReductionSequence {
    std::vector<ContractionRecord> records;
    PlaneGraph base;
};

enum class Strategy { main, footnote };

// All separating triangles of a triangulation, each with its interior vertex
// set (computed by a flood fill over the face adjacency on the side of the
// cycle away from the outer face). Ascending by cycle triple.
std::vector<SeparatingTriangle> separating_triangles(const PlaneGraph& g);

// Edge selection, main strategy: if the triangulation has separating
// triangles, returns an edge incident to a vertex interior to an innermost
// one (minimum interior size, ties by cycle triple); otherwise the smallest
// eligible edge. Either way the returned edge has exactly two common
// neighbours and does not lie on the outer face: contracting an outer-face
// edge would collapse the nominated outer face, which has no counterpart in
// the contracted graph, so no drawing of it could be expanded back.
std::pair<VertexId, VertexId> select_edge_main(const PlaneGraph& g);

// Edge selection, footnote strategy: the lexicographically smallest edge with
// exactly two common neighbours that is not on the outer face.
std::pair<VertexId, VertexId> select_edge_footnote(const PlaneGraph& g);

// Contracts edge vw (exactly two common neighbours required) into s = v,
// replacing the parallel pairs {vp,wp} and {vq,wq} by sp and sq and splicing
// the rotations as described on ContractionRecord. The result is validated to
// be a simple plane triangulation on one vertex fewer.
std::pair<PlaneGraph, ContractionRecord> contract(const PlaneGraph& g,
                                                  std::pair<VertexId, VertexId> edge);

// Inverse of contract: restores v and w from the record. Exact inverse,
// including the outer dart.
PlaneGraph uncontract(const PlaneGraph& g, const ContractionRecord& rec);

// Repeatedly selects and contracts down to a 3-vertex triangulation.
// |records| = |V| - 3.
ReductionSequence reduce(const PlaneGraph& g, Strategy strategy);

}  // namespace planedraw
