#pragma once

#include <utility>
#include <vector>

#include "planedraw/drawing.hpp"
#include "planedraw/plane_graph.hpp"

namespace planedraw {

// Result of completing a plane graph to a plane triangulation. Removing
// added_edges (and the original outer face nomination) recovers the input
// exactly, including its rotation system.
struct Augmentation {
    PlaneGraph triangulated;
    std::vector<std::pair<VertexId, VertexId>> added_edges;
};

// Completes a simple connected plane graph (|V| >= 3) to a simple plane
// triangulation by inserting chords one face at a time. Faces whose walk
// repeats a vertex (cut vertices) are first split by a chord between
// neighbours of two occurrences; simple-cycle faces are fanned from the
// lowest-id vertex, falling back to a zig-zag chord whenever a fan chord
// would duplicate an existing edge. The original rotation order is preserved:
// deleting the added neighbours from any final rotation list yields the
// original list up to cyclic shift. The outer face of the result is the
// triangle containing the original outer dart.
Augmentation triangulate(const PlaneGraph& g);

// Restricts a verified drawing of the triangulation to the original graph.
// Coordinates are unchanged; validity is monotone under edge deletion.
template <typename S>
Drawing<S> strip(const Augmentation& aug, Drawing<S> drawing) {
    if (!drawing.covers(aug.triangulated))
        throw ArgumentError("drawing does not cover the triangulation");
    return drawing;
}

}  // namespace planedraw
