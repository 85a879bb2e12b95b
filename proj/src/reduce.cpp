#include "planedraw/reduce.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "planedraw/errors.hpp"

namespace planedraw {

namespace {

std::string edge_str(VertexId a, VertexId b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

void require_triangulation(const PlaneGraph& g, const char* op) {
    if (!g.is_triangulation())
        throw StateError(std::string(op) + " requires a plane triangulation");
}

// Sorted vertex triple of a face walk.
std::array<VertexId, 3> face_triple(const FaceWalk& f) {
    std::array<VertexId, 3> t{f.darts[0].tail, f.darts[1].tail, f.darts[2].tail};
    std::sort(t.begin(), t.end());
    return t;
}

std::pair<VertexId, VertexId> sorted_edge(VertexId a, VertexId b) {
    return {std::min(a, b), std::max(a, b)};
}

// Edges whose both darts lie on the outer face walk.
std::set<std::pair<VertexId, VertexId>> outer_edges(const PlaneGraph& g) {
    std::set<std::pair<VertexId, VertexId>> out;
    if (!g.outer_dart()) return out;
    for (const Dart& d : g.face_of(*g.outer_dart()).darts)
        out.insert(sorted_edge(d.tail, d.head));
    return out;
}

// All edges ascending as (min, max) pairs.
std::vector<std::pair<VertexId, VertexId>> sorted_edges(const PlaneGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId v : g.vertices())
        for (VertexId u : g.rotation(v))
            if (v < u) out.emplace_back(v, u);
    std::sort(out.begin(), out.end());
    return out;
}

// Rotation of v as a linear list starting at `start`.
std::vector<VertexId> rotation_from(const PlaneGraph& g, VertexId v, VertexId start) {
    const auto& r = g.rotation(v);
    auto it = std::find(r.begin(), r.end(), start);
    if (it == r.end())
        throw ArgumentError("vertex " + std::to_string(start) + " not adjacent to " +
                            std::to_string(v));
    std::vector<VertexId> out(it, r.end());
    out.insert(out.end(), r.begin(), it);
    return out;
}

}  // namespace

std::vector<SeparatingTriangle> separating_triangles(const PlaneGraph& g) {
    require_triangulation(g, "separating_triangles");

    const std::vector<FaceWalk> faces = g.faces();
    std::set<std::array<VertexId, 3>> facial;
    for (const FaceWalk& f : faces) facial.insert(face_triple(f));

    int outer_index = -1;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (faces[i].outer) outer_index = i;

    // Face adjacency across shared edges, for the interior flood fill.
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> by_edge;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        for (const Dart& d : faces[i].darts)
            by_edge[sorted_edge(d.tail, d.head)].push_back(i);

    std::vector<SeparatingTriangle> out;
    for (auto [a, b] : sorted_edges(g)) {
        for (VertexId c : g.common_neighbours(a, b)) {
            if (c <= b) continue;  // each clique once, ascending
            std::array<VertexId, 3> cycle{a, b, c};
            if (facial.count(cycle)) continue;

            // Flood the dual from the outer face, not crossing cycle edges;
            // the unreached side is the interior.
            std::set<std::pair<VertexId, VertexId>> blocked{
                sorted_edge(a, b), sorted_edge(b, c), sorted_edge(a, c)};
            std::vector<char> reached(faces.size(), 0);
            std::vector<int> stack{outer_index};
            reached[outer_index] = 1;
            while (!stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                for (const Dart& d : faces[f].darts) {
                    auto e = sorted_edge(d.tail, d.head);
                    if (blocked.count(e)) continue;
                    for (int nb : by_edge[e])
                        if (!reached[nb]) {
                            reached[nb] = 1;
                            stack.push_back(nb);
                        }
                }
            }
            std::set<VertexId> inside;
            for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
                if (reached[i]) continue;
                for (const Dart& d : faces[i].darts) inside.insert(d.tail);
            }
            for (VertexId cv : cycle) inside.erase(cv);
            if (inside.empty())
                throw KernelError("non-facial triangle with empty interior");
            out.push_back(SeparatingTriangle{
                cycle, std::vector<VertexId>(inside.begin(), inside.end())});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.cycle < y.cycle;
    });
    return out;
}

namespace {

// Lexicographically smallest edge with exactly two common neighbours that is
// not on the outer face, or (-1, -1).
std::pair<VertexId, VertexId> smallest_eligible_edge(const PlaneGraph& g) {
    const auto outer = outer_edges(g);
    for (auto e : sorted_edges(g)) {
        if (outer.count(e)) continue;
        if (g.common_neighbours(e.first, e.second).size() == 2) return e;
    }
    return {-1, -1};
}

}  // namespace

std::pair<VertexId, VertexId> select_edge_main(const PlaneGraph& g) {
    require_triangulation(g, "select_edge_main");
    if (g.vertex_count() < 4) throw SizeError("nothing to contract below 4 vertices");

    const auto sts = separating_triangles(g);
    if (sts.empty()) {
        auto e = smallest_eligible_edge(g);
        if (e.first < 0)
            throw KernelError("triangulation without separating triangles has no "
                              "eligible edge");
        return e;
    }

    const SeparatingTriangle* innermost = &sts.front();
    for (const auto& st : sts) {
        if (st.interior.size() < innermost->interior.size() ||
            (st.interior.size() == innermost->interior.size() &&
             st.cycle < innermost->cycle))
            innermost = &st;
    }

    VertexId u = innermost->interior.front();
    std::vector<VertexId> nbrs = g.rotation(u);
    std::sort(nbrs.begin(), nbrs.end());
    for (VertexId z : nbrs)
        if (g.common_neighbours(u, z).size() == 2) return sorted_edge(u, z);

    // The footnote guarantees an eligible incident edge exists; reaching this
    // means an invariant is broken, so fail loudly rather than retry.
    throw KernelError("interior vertex " + std::to_string(u) +
                      " of innermost separating triangle has no incident edge "
                      "with exactly two common neighbours");
}

std::pair<VertexId, VertexId> select_edge_footnote(const PlaneGraph& g) {
    require_triangulation(g, "select_edge_footnote");
    if (g.vertex_count() < 4) throw SizeError("nothing to contract below 4 vertices");
    auto e = smallest_eligible_edge(g);
    if (e.first < 0)
        throw KernelError("no edge with exactly two common neighbours off the "
                          "outer face");
    return e;
}

std::pair<PlaneGraph, ContractionRecord> contract(const PlaneGraph& g,
                                                  std::pair<VertexId, VertexId> edge) {
    auto [v, w] = edge;
    if (!g.has_vertex(v) || !g.has_vertex(w) || !g.adjacent(v, w))
        throw ArgumentError(edge_str(v, w) + " is not an edge");
    if (g.vertex_count() < 4) throw SizeError("nothing to contract below 4 vertices");

    const auto common = g.common_neighbours(v, w);
    if (common.size() != 2)
        throw PreconditionError("edge " + edge_str(v, w) + " has " +
                                std::to_string(common.size()) +
                                " common neighbours, need exactly 2");

    const Dart dvw{v, w};
    auto [p, q] = g.face_triangle_of(dvw);

    if (g.outer_dart()) {
        const FaceWalk outer = g.face_of(*g.outer_dart());
        if (outer.contains(dvw) || outer.contains(dvw.reversed()))
            throw PreconditionError("edge " + edge_str(v, w) +
                                    " lies on the outer face and cannot be "
                                    "contracted");
    }

    // rotation(v) = (p, w, q, x1..xk), rotation(w) = (q, v, p, y1..yl).
    std::vector<VertexId> rv = rotation_from(g, v, p);
    std::vector<VertexId> rw = rotation_from(g, w, q);
    if (rv.size() < 3 || rv[1] != w || rv[2] != q || rw.size() < 3 || rw[1] != v ||
        rw[2] != p)
        throw KernelError("rotation structure around " + edge_str(v, w) +
                          " does not match its flanking triangles");
    std::vector<VertexId> xs(rv.begin() + 3, rv.end());
    std::vector<VertexId> ys(rw.begin() + 3, rw.end());

    RotationTable t = g.to_table();

    // s reuses v's id: rotation(s) = (p, y1..yl, q, x1..xk).
    std::vector<VertexId> rs;
    rs.push_back(p);
    rs.insert(rs.end(), ys.begin(), ys.end());
    rs.push_back(q);
    rs.insert(rs.end(), xs.begin(), xs.end());
    t.rot[v] = std::move(rs);
    t.remove_vertex(w);

    // At p the pair (w, v) collapses to s, at q the pair (v, w) does; with
    // s = v this is just dropping w. The y's swap w for s.
    t.remove_neighbour(p, w);
    t.remove_neighbour(q, w);
    for (VertexId y : ys) t.replace_neighbour(y, w, v);

    if (t.outer) {
        if (t.outer->tail == w) t.outer->tail = v;
        if (t.outer->head == w) t.outer->head = v;
        if (t.outer->tail == t.outer->head)
            throw KernelError("outer dart collapsed during contraction");
    }

    PlaneGraph result = t.build();
    result.require_planar();
    if (!result.is_triangulation())
        throw KernelError("contraction of " + edge_str(v, w) +
                          " produced a non-triangulation");

    ContractionRecord rec{v, v, w, p, q, std::move(xs), std::move(ys)};
    return {std::move(result), std::move(rec)};
}

PlaneGraph uncontract(const PlaneGraph& g, const ContractionRecord& rec) {
    const VertexId v = rec.v, w = rec.w, p = rec.p, q = rec.q;
    if (!g.has_vertex(v)) throw ArgumentError("merged vertex missing");
    if (g.has_vertex(w)) throw ArgumentError("split target id already present");

    // Sanity: rotation(s) must read (p, ys, q, xs).
    {
        std::vector<VertexId> expect;
        expect.push_back(p);
        expect.insert(expect.end(), rec.ys.begin(), rec.ys.end());
        expect.push_back(q);
        expect.insert(expect.end(), rec.xs.begin(), rec.xs.end());
        if (rotation_from(g, v, p) != expect)
            throw ArgumentError("record does not match the rotation of the merged "
                                "vertex");
    }

    RotationTable t = g.to_table();

    std::vector<VertexId> rv;
    rv.push_back(p);
    rv.push_back(w);
    rv.push_back(q);
    rv.insert(rv.end(), rec.xs.begin(), rec.xs.end());
    t.rot[v] = std::move(rv);

    std::vector<VertexId> rw;
    rw.push_back(q);
    rw.push_back(v);
    rw.push_back(p);
    rw.insert(rw.end(), rec.ys.begin(), rec.ys.end());
    t.add_vertex(w, std::move(rw));

    t.insert_after(q, v, w);                       // (v) -> (v, w)
    {
        // (v) -> (w, v) at p: insert w before v.
        auto& rp = t.rot[p];
        auto it = std::find(rp.begin(), rp.end(), v);
        if (it == rp.end()) throw ArgumentError("record vertex p not adjacent to s");
        rp.insert(it, w);
    }
    for (VertexId y : rec.ys) t.replace_neighbour(y, v, w);

    // Outer dart: invert the contraction substitution. A dart (v, t) maps
    // back to (w, t) exactly when t pulls toward w's side: t == q or t in ys.
    if (t.outer) {
        auto in_ys = [&rec](VertexId a) {
            return std::find(rec.ys.begin(), rec.ys.end(), a) != rec.ys.end();
        };
        Dart& d = *t.outer;
        if (d.tail == v && (d.head == q || in_ys(d.head))) d.tail = w;
        else if (d.head == v && (d.tail == p || in_ys(d.tail))) d.head = w;
    }

    PlaneGraph result = t.build();
    result.require_planar();
    if (!result.is_triangulation())
        throw KernelError("uncontract produced a non-triangulation");
    return result;
}

ReductionSequence reduce(const PlaneGraph& g, Strategy strategy) {
    require_triangulation(g, "reduce");
    g.require_planar();

    PlaneGraph cur = g;
    std::vector<ContractionRecord> records;
    while (cur.vertex_count() > 3) {
        auto edge = strategy == Strategy::main ? select_edge_main(cur)
                                               : select_edge_footnote(cur);
        auto [next, rec] = contract(cur, edge);
        records.push_back(std::move(rec));
        cur = std::move(next);
    }
    return ReductionSequence{std::move(records), std::move(cur)};
}

}  // namespace planedraw
