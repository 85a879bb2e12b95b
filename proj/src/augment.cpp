#include "planedraw/augment.hpp"

#include <algorithm>
#include <optional>

#include "planedraw/errors.hpp"

namespace planedraw {

namespace {

// A chord between walk positions x and y of face walk `w` is insertable when
// the endpoints are distinct vertices, the positions are not walk-adjacent,
// and the graph does not already have that edge.
bool chord_ok(const PlaneGraph& g, const std::vector<VertexId>& w, int x, int y) {
    int m = static_cast<int>(w.size());
    int d = (y - x + m) % m;
    if (d <= 1 || d >= m - 1) return false;
    if (w[x] == w[y]) return false;
    return !g.adjacent(w[x], w[y]);
}

// Inserts the chord between positions x and y of the face walk and records
// it. At each endpoint the new neighbour goes immediately after the incoming
// walk neighbour, which places the chord inside this face.
void insert_chord(RotationTable& t, const std::vector<VertexId>& w, int x, int y,
                  std::vector<std::pair<VertexId, VertexId>>& added) {
    int m = static_cast<int>(w.size());
    VertexId a = w[x], b = w[y];
    VertexId before_a = w[(x - 1 + m) % m];
    VertexId before_b = w[(y - 1 + m) % m];
    t.insert_after(a, before_a, b);
    t.insert_after(b, before_b, a);
    added.emplace_back(a, b);
}

// First position pair (i < j) carrying the same vertex, scanning i then j.
std::optional<std::pair<int, int>> first_repeat(const std::vector<VertexId>& w) {
    int m = static_cast<int>(w.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (w[i] == w[j]) return std::make_pair(i, j);
    return std::nullopt;
}

}  // namespace

Augmentation triangulate(const PlaneGraph& g) {
    if (g.vertex_count() < 3)
        throw SizeError("triangulation needs at least 3 vertices, got " +
                        std::to_string(g.vertex_count()));
    g.require_planar();

    PlaneGraph cur = g;
    std::vector<std::pair<VertexId, VertexId>> added;

    for (;;) {
        const std::vector<FaceWalk> faces = cur.faces();
        const FaceWalk* big = nullptr;
        for (const FaceWalk& f : faces)
            if (f.size() > 3) {
                big = &f;
                break;
            }
        if (!big) break;

        const std::vector<VertexId> w = big->vertices();
        const int m = static_cast<int>(w.size());
        RotationTable t = cur.to_table();
        bool inserted = false;

        if (auto rep = first_repeat(w)) {
            // Cut vertex on the walk: split the repetition with a chord
            // between neighbours of the two occurrences.
            auto [i, j] = *rep;
            const std::pair<int, int> cands[] = {
                {(i + 1) % m, (j + 1) % m},
                {(i + 1) % m, (j - 1 + m) % m},
                {(i - 1 + m) % m, (j + 1) % m},
                {(i - 1 + m) % m, (j - 1 + m) % m},
            };
            for (auto [x, y] : cands)
                if (chord_ok(cur, w, x, y)) {
                    insert_chord(t, w, x, y, added);
                    inserted = true;
                    break;
                }
        } else {
            // Simple cycle: fan from the lowest-id vertex, sliding to the
            // next boundary vertex whenever the fan chord already exists.
            int apex = static_cast<int>(
                std::min_element(w.begin(), w.end()) - w.begin());
            for (int off = 0; off < m && !inserted; ++off) {
                int x = (apex + off) % m;
                int y = (x + 2) % m;
                if (chord_ok(cur, w, x, y)) {
                    insert_chord(t, w, x, y, added);
                    inserted = true;
                }
            }
        }

        if (!inserted) {
            // Exhaustive fallback; some valid chord must exist in a face of
            // length >= 4 of a simple plane graph.
            for (int x = 0; x < m && !inserted; ++x)
                for (int y = x + 1; y < m && !inserted; ++y)
                    if (chord_ok(cur, w, x, y)) {
                        insert_chord(t, w, x, y, added);
                        inserted = true;
                    }
        }
        if (!inserted)
            throw StructuralError("no insertable chord in a face of length " +
                                  std::to_string(m));

        cur = t.build();  // validates simplicity and symmetry each step
    }

    cur.require_planar();
    if (!cur.is_triangulation())
        throw KernelError("triangulate produced a non-triangulation");
    return Augmentation{std::move(cur), std::move(added)};
}

}  // namespace planedraw
