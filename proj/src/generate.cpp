#include "planedraw/generate.hpp"

#include <algorithm>
#include <array>

#include "planedraw/errors.hpp"

namespace planedraw {

PlaneGraph stack_vertex(const PlaneGraph& g, const FaceWalk& face, VertexId new_id) {
    if (face.size() != 3) throw ArgumentError("can only stack into a triangular face");
    if (g.has_vertex(new_id)) throw ArgumentError("stack id already present");
    const VertexId a = face.darts[0].tail;
    const VertexId b = face.darts[1].tail;
    const VertexId c = face.darts[2].tail;

    RotationTable t = g.to_table();
    // Clockwise around the new vertex the corners appear in reverse walk
    // order; at each corner the new neighbour goes between the incoming and
    // outgoing walk neighbours.
    t.add_vertex(new_id, {a, c, b});
    t.insert_after(a, c, new_id);
    t.insert_after(b, a, new_id);
    t.insert_after(c, b, new_id);
    PlaneGraph out = t.build();
    out.require_planar();
    return out;
}

PlaneGraph gen_triangle() {
    return PlaneGraph({{1, 2}, {0, 2}, {0, 1}}, Dart{1, 0});
}

PlaneGraph gen_k4() {
    return PlaneGraph({{1, 3, 2}, {0, 2, 3}, {0, 3, 1}, {0, 1, 2}}, Dart{2, 1});
}

PlaneGraph gen_octahedron() {
    return PlaneGraph(
        {
            {1, 2, 5, 3},  // 0
            {0, 3, 4, 2},  // 1
            {0, 1, 4, 5},  // 2
            {0, 5, 4, 1},  // 3
            {1, 3, 5, 2},  // 4
            {0, 2, 4, 3},  // 5
        },
        Dart{1, 0});
}

PlaneGraph gen_cycle(int n) {
    if (n < 3) throw SizeError("cycle needs at least 3 vertices");
    std::vector<std::vector<VertexId>> rot(n);
    for (int i = 0; i < n; ++i)
        rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return PlaneGraph(std::move(rot), Dart{1, 0});
}

PlaneGraph gen_star(int leaves) {
    if (leaves < 1) throw SizeError("star needs at least one leaf");
    std::vector<std::vector<VertexId>> rot(leaves + 1);
    for (int i = 1; i <= leaves; ++i) {
        rot[0].push_back(i);
        rot[i] = {0};
    }
    return PlaneGraph(std::move(rot), Dart{1, 0});
}

PlaneGraph gen_wheel(int n) {
    if (n < 4) throw SizeError("wheel needs at least 4 vertices");
    const int rim = n - 1;
    std::vector<std::vector<VertexId>> rot(n);
    rot[0].reserve(rim);
    rot[0].push_back(1);
    for (int i = rim; i >= 2; --i) rot[0].push_back(i);
    for (int i = 1; i <= rim; ++i) {
        VertexId next = i == rim ? 1 : i + 1;
        VertexId prev = i == 1 ? rim : i - 1;
        rot[i] = {0, next, prev};
    }
    PlaneGraph g(std::move(rot), Dart{1, rim});
    g.require_planar();
    return g;
}

namespace {

std::array<VertexId, 3> face_triple(const FaceWalk& f) {
    std::array<VertexId, 3> t{f.darts[0].tail, f.darts[1].tail, f.darts[2].tail};
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

PlaneGraph gen_stacked(int depth) {
    if (depth < 0) throw SizeError("stacked depth must be nonnegative");
    PlaneGraph g = gen_k4();
    VertexId last = -1;
    for (int k = 0; k < depth; ++k) {
        const auto faces = g.faces();
        const FaceWalk* chosen = nullptr;
        std::array<VertexId, 3> best{};
        for (const FaceWalk& f : faces) {
            if (f.outer) continue;
            auto tri = face_triple(f);
            if (last >= 0 && std::find(tri.begin(), tri.end(), last) == tri.end())
                continue;
            if (!chosen || tri < best) {
                chosen = &f;
                best = tri;
            }
        }
        VertexId id = g.slot_count();
        g = stack_vertex(g, *chosen, id);
        last = id;
    }
    return g;
}

PlaneGraph gen_random_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw SizeError("random triangulation needs n >= 3");
    PlaneGraph g = gen_triangle();
    Rng rng(seed);
    for (VertexId id = 3; id < n; ++id) {
        const auto faces = g.faces();
        const FaceWalk& f = faces[rng.below(faces.size())];
        g = stack_vertex(g, f, id);
    }
    return g;
}

PlaneGraph gen(const GeneratorSpec& spec) {
    if (spec.family == "triangle") return gen_triangle();
    if (spec.family == "k4") return gen_k4();
    if (spec.family == "octahedron") return gen_octahedron();
    if (spec.family == "cycle") return gen_cycle(spec.n);
    if (spec.family == "star") return gen_star(spec.n);
    if (spec.family == "wheel") return gen_wheel(spec.n);
    if (spec.family == "stacked") return gen_stacked(spec.depth);
    if (spec.family == "random") return gen_random_triangulation(spec.n, spec.seed);
    throw ArgumentError("unknown generator family '" + spec.family + "'");
}

}  // namespace planedraw
