#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "planedraw/errors.hpp"

namespace planedraw {

using VertexId = int;

// An edge with a direction. Every edge of a plane graph contributes exactly
// two darts; faces are the orbits of the next-dart rule.
struct Dart {
    VertexId tail = -1;
    VertexId head = -1;

    Dart reversed() const { return {head, tail}; }
    friend bool operator==(const Dart& a, const Dart& b) {
        return a.tail == b.tail && a.head == b.head;
    }
};

struct FaceWalk {
    std::vector<Dart> darts;
    bool outer = false;

    std::size_t size() const { return darts.size(); }
    std::vector<VertexId> vertices() const;
    bool contains(const Dart& d) const;
};

class PlaneGraph;

// Mutable working form used by the operations that perform rotation surgery
// (triangulation, contraction, vertex stacking). build() validates and
// produces an immutable PlaneGraph.
struct RotationTable {
    std::vector<std::vector<VertexId>> rot;
    std::vector<char> present;
    std::optional<Dart> outer;

    int slot_count() const { return static_cast<int>(rot.size()); }
    void ensure_slot(VertexId v);
    void add_vertex(VertexId v, std::vector<VertexId> rotation);
    void remove_vertex(VertexId v);
    // Inserts `added` into rot(v) immediately after the entry `after`.
    void insert_after(VertexId v, VertexId after, VertexId added);
    void remove_neighbour(VertexId v, VertexId u);
    void replace_neighbour(VertexId v, VertexId old_nb, VertexId new_nb);

    PlaneGraph build() const;
};

// A combinatorial plane graph: per-vertex clockwise neighbour lists (rotation
// system, y-up convention) plus a nominated outer face identified by one dart
// on its boundary. Immutable after construction; construction validates
// simplicity, symmetry and connectivity. Planarity of the rotation system
// (Euler's formula) is checked separately by require_planar(), because the
// verifier must be able to examine rotation systems that fail it.
//
// Face traversal rule, fixed once for the whole pipeline: from dart (u -> v)
// the next dart is (v -> w) where w is the neighbour immediately after u in
// clockwise order around v. Under this rule bounded faces come out as
// counterclockwise closed walks and the outer face as a clockwise walk.
class PlaneGraph {
public:
    // Dense construction: rotations[i] is the clockwise neighbour list of
    // vertex i; all slots are present. `outer` may be absent only for an
    // edgeless single-vertex graph.
    explicit PlaneGraph(std::vector<std::vector<VertexId>> rotations,
                        std::optional<Dart> outer);

    // Construction with retired slots (used mid-reduction).
    static PlaneGraph from_parts(std::vector<std::vector<VertexId>> rotations,
                                 std::vector<char> present,
                                 std::optional<Dart> outer);

    int slot_count() const { return static_cast<int>(rot_.size()); }
    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return edge_count_; }

    bool has_vertex(VertexId v) const {
        return v >= 0 && v < slot_count() && present_[v];
    }
    std::vector<VertexId> vertices() const;

    const std::vector<VertexId>& rotation(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(rotation(v).size()); }
    bool adjacent(VertexId u, VertexId v) const;

    // All edges as ascending (min, max) pairs, lexicographically sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    std::optional<Dart> outer_dart() const { return outer_; }

    // Neighbour immediately after / before u in clockwise order around v.
    VertexId successor(VertexId v, VertexId u) const;
    VertexId predecessor(VertexId v, VertexId u) const;

    Dart next_dart(const Dart& d) const;

    // All face boundary walks; every dart appears in exactly one walk. The
    // walk containing the outer dart is flagged as outer.
    std::vector<FaceWalk> faces() const;
    FaceWalk face_of(Dart d) const;

    // True iff every face walk, including the outer one, has length 3.
    bool is_triangulation() const;

    // N(v) intersected with N(w), ascending. Requires vw to be an edge.
    std::vector<VertexId> common_neighbours(VertexId v, VertexId w) const;

    // For an edge vw of a triangulation, the apexes (p, q) of the two faces
    // flanking it: p is the apex of the face bounded by dart v->w, q the apex
    // of the face bounded by w->v. Equivalently, clockwise around v the
    // neighbours read (p, w, q, ...). Only the two flanking faces are
    // inspected, so this works on any graph whose local faces are triangles.
    std::pair<VertexId, VertexId> face_triangle_of(const Dart& d) const;

    // Throws StructuralError unless the rotation system satisfies Euler's
    // formula |V| - |E| + |F| = 2, i.e. describes a genus-zero embedding.
    void require_planar() const;

    RotationTable to_table() const;

    // Structural equality: same vertex set, same cyclic rotations, same
    // nominated outer dart. Rotations are stored canonically (smallest
    // neighbour first) so plain comparison suffices.
    friend bool operator==(const PlaneGraph& a, const PlaneGraph& b);

private:
    PlaneGraph() = default;
    void validate() const;
    void canonicalize();

    std::vector<std::vector<VertexId>> rot_;
    std::vector<char> present_;
    std::optional<Dart> outer_;
    int vertex_count_ = 0;
    int edge_count_ = 0;
};

}  // namespace planedraw
