#include "planedraw/plane_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace planedraw {

namespace {

std::string pair_str(VertexId a, VertexId b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

std::vector<VertexId> FaceWalk::vertices() const {
    std::vector<VertexId> out;
    out.reserve(darts.size());
    for (const Dart& d : darts) out.push_back(d.tail);
    return out;
}

bool FaceWalk::contains(const Dart& d) const {
    return std::find(darts.begin(), darts.end(), d) != darts.end();
}

// ---------------------------------------------------------------------------
// RotationTable
// ---------------------------------------------------------------------------

void RotationTable::ensure_slot(VertexId v) {
    if (v >= slot_count()) {
        rot.resize(v + 1);
        present.resize(v + 1, 0);
    }
}

void RotationTable::add_vertex(VertexId v, std::vector<VertexId> rotation) {
    ensure_slot(v);
    if (present[v]) throw ArgumentError("vertex " + std::to_string(v) + " already present");
    present[v] = 1;
    rot[v] = std::move(rotation);
}

void RotationTable::remove_vertex(VertexId v) {
    present[v] = 0;
    rot[v].clear();
}

void RotationTable::insert_after(VertexId v, VertexId after, VertexId added) {
    auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), after);
    if (it == r.end())
        throw ArgumentError("no neighbour " + std::to_string(after) + " at vertex " +
                            std::to_string(v));
    r.insert(it + 1, added);
}

void RotationTable::remove_neighbour(VertexId v, VertexId u) {
    auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), u);
    if (it == r.end())
        throw ArgumentError("no neighbour " + std::to_string(u) + " at vertex " +
                            std::to_string(v));
    r.erase(it);
}

void RotationTable::replace_neighbour(VertexId v, VertexId old_nb, VertexId new_nb) {
    auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), old_nb);
    if (it == r.end())
        throw ArgumentError("no neighbour " + std::to_string(old_nb) + " at vertex " +
                            std::to_string(v));
    *it = new_nb;
}

PlaneGraph RotationTable::build() const {
    return PlaneGraph::from_parts(rot, present, outer);
}

// ---------------------------------------------------------------------------
// PlaneGraph
// ---------------------------------------------------------------------------

PlaneGraph::PlaneGraph(std::vector<std::vector<VertexId>> rotations,
                       std::optional<Dart> outer) {
    rot_ = std::move(rotations);
    present_.assign(rot_.size(), 1);
    outer_ = outer;
    canonicalize();
    validate();
}

PlaneGraph PlaneGraph::from_parts(std::vector<std::vector<VertexId>> rotations,
                                  std::vector<char> present,
                                  std::optional<Dart> outer) {
    PlaneGraph g;
    g.rot_ = std::move(rotations);
    g.present_ = std::move(present);
    if (g.present_.size() != g.rot_.size())
        throw ArgumentError("present mask size does not match rotation table");
    g.outer_ = outer;
    g.canonicalize();
    g.validate();
    return g;
}

void PlaneGraph::canonicalize() {
    vertex_count_ = 0;
    int dart_count = 0;
    for (int v = 0; v < slot_count(); ++v) {
        if (!present_[v]) {
            rot_[v].clear();
            continue;
        }
        ++vertex_count_;
        dart_count += static_cast<int>(rot_[v].size());
        auto& r = rot_[v];
        if (!r.empty()) {
            auto min_it = std::min_element(r.begin(), r.end());
            std::rotate(r.begin(), min_it, r.end());
        }
    }
    edge_count_ = dart_count / 2;
}

void PlaneGraph::validate() const {
    if (vertex_count_ == 0) throw StructuralError("graph has no vertices");

    int dart_count = 0;
    for (int v = 0; v < slot_count(); ++v) {
        if (!present_[v]) continue;
        std::set<VertexId> seen;
        for (VertexId u : rot_[v]) {
            if (u == v) throw StructuralError("loop at vertex " + std::to_string(v));
            if (u < 0 || u >= slot_count() || !present_[u])
                throw StructuralError("rotation of " + std::to_string(v) +
                                      " references missing vertex " + std::to_string(u));
            if (!seen.insert(u).second)
                throw StructuralError("parallel edge " + pair_str(v, u) +
                                      ": neighbour repeated in rotation");
            ++dart_count;
        }
    }
    if (dart_count % 2 != 0) throw StructuralError("odd dart count");

    // Symmetry.
    for (int v = 0; v < slot_count(); ++v) {
        if (!present_[v]) continue;
        for (VertexId u : rot_[v]) {
            const auto& ru = rot_[u];
            if (std::find(ru.begin(), ru.end(), v) == ru.end())
                throw StructuralError("asymmetric adjacency " + pair_str(v, u) + ": " +
                                      std::to_string(u) + " lacks " + std::to_string(v));
        }
    }

    // Connectivity.
    {
        VertexId start = -1;
        for (int v = 0; v < slot_count(); ++v)
            if (present_[v]) {
                start = v;
                break;
            }
        std::vector<char> seen(slot_count(), 0);
        std::vector<VertexId> stack{start};
        seen[start] = 1;
        int reached = 0;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            ++reached;
            for (VertexId u : rot_[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        if (reached != vertex_count_) throw StructuralError("graph is disconnected");
    }

    // Outer dart.
    if (edge_count_ > 0) {
        if (!outer_) throw StructuralError("graph with edges needs an outer dart");
        if (!has_vertex(outer_->tail) || !has_vertex(outer_->head) ||
            !adjacent(outer_->tail, outer_->head))
            throw StructuralError("outer dart " + pair_str(outer_->tail, outer_->head) +
                                  " is not an edge");
    } else if (outer_) {
        throw StructuralError("edgeless graph cannot have an outer dart");
    }
}

std::vector<VertexId> PlaneGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(vertex_count_);
    for (int v = 0; v < slot_count(); ++v)
        if (present_[v]) out.push_back(v);
    return out;
}

const std::vector<VertexId>& PlaneGraph::rotation(VertexId v) const {
    if (!has_vertex(v)) throw ArgumentError("no vertex " + std::to_string(v));
    return rot_[v];
}

bool PlaneGraph::adjacent(VertexId u, VertexId v) const {
    const auto& r = rotation(u);
    return std::find(r.begin(), r.end(), v) != r.end();
}

std::vector<std::pair<VertexId, VertexId>> PlaneGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (int v = 0; v < slot_count(); ++v) {
        if (!present_[v]) continue;
        for (VertexId u : rot_[v])
            if (v < u) out.emplace_back(v, u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexId PlaneGraph::successor(VertexId v, VertexId u) const {
    const auto& r = rotation(v);
    auto it = std::find(r.begin(), r.end(), u);
    if (it == r.end())
        throw ArgumentError(pair_str(v, u) + " is not an edge");
    ++it;
    return it == r.end() ? r.front() : *it;
}

VertexId PlaneGraph::predecessor(VertexId v, VertexId u) const {
    const auto& r = rotation(v);
    auto it = std::find(r.begin(), r.end(), u);
    if (it == r.end())
        throw ArgumentError(pair_str(v, u) + " is not an edge");
    return it == r.begin() ? r.back() : *(it - 1);
}

Dart PlaneGraph::next_dart(const Dart& d) const {
    return {d.head, successor(d.head, d.tail)};
}

std::vector<FaceWalk> PlaneGraph::faces() const {
    // Deterministic orbit enumeration: darts in (tail, rotation position)
    // order, each orbit traversed once from its first unvisited dart.
    std::vector<FaceWalk> out;
    std::set<std::pair<VertexId, VertexId>> visited;
    for (int v = 0; v < slot_count(); ++v) {
        if (!present_[v]) continue;
        for (VertexId u : rot_[v]) {
            if (visited.count({v, u})) continue;
            FaceWalk walk;
            Dart d{v, u};
            do {
                visited.insert({d.tail, d.head});
                walk.darts.push_back(d);
                d = next_dart(d);
            } while (!(d == Dart{v, u}));
            if (outer_ && walk.contains(*outer_)) walk.outer = true;
            out.push_back(std::move(walk));
        }
    }
    return out;
}

FaceWalk PlaneGraph::face_of(Dart start) const {
    if (!has_vertex(start.tail) || !adjacent(start.tail, start.head))
        throw ArgumentError(pair_str(start.tail, start.head) + " is not an edge");
    FaceWalk walk;
    Dart d = start;
    do {
        walk.darts.push_back(d);
        d = next_dart(d);
    } while (!(d == start));
    if (outer_ && walk.contains(*outer_)) walk.outer = true;
    return walk;
}

bool PlaneGraph::is_triangulation() const {
    if (vertex_count_ < 3) return false;
    for (const FaceWalk& f : faces())
        if (f.size() != 3) return false;
    return true;
}

std::vector<VertexId> PlaneGraph::common_neighbours(VertexId v, VertexId w) const {
    if (!adjacent(v, w))
        throw ArgumentError(pair_str(v, w) + " is not an edge");
    std::vector<VertexId> a = rotation(v), b = rotation(w);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::pair<VertexId, VertexId> PlaneGraph::face_triangle_of(const Dart& d) const {
    if (!has_vertex(d.tail) || !adjacent(d.tail, d.head))
        throw ArgumentError(pair_str(d.tail, d.head) + " is not an edge");
    if (face_of(d).size() != 3 || face_of(d.reversed()).size() != 3)
        throw StateError("edge " + pair_str(d.tail, d.head) +
                         " is not flanked by two triangles");
    VertexId p = successor(d.head, d.tail);
    VertexId q = successor(d.tail, d.head);
    return {p, q};
}

void PlaneGraph::require_planar() const {
    int f = static_cast<int>(faces().size());
    if (vertex_count_ - edge_count_ + f != 2)
        throw StructuralError("rotation system is not planar: |V| - |E| + |F| = " +
                              std::to_string(vertex_count_ - edge_count_ + f));
}

RotationTable PlaneGraph::to_table() const {
    RotationTable t;
    t.rot = rot_;
    t.present = present_;
    t.outer = outer_;
    return t;
}

bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.vertex_count_ != b.vertex_count_ || a.edge_count_ != b.edge_count_) return false;
    bool a_outer = a.outer_.has_value();
    if (a_outer != b.outer_.has_value()) return false;
    if (a_outer && !(a.outer_.value() == b.outer_.value())) return false;
    int n = std::max(a.slot_count(), b.slot_count());
    for (int v = 0; v < n; ++v) {
        bool pa = v < a.slot_count() && a.present_[v];
        bool pb = v < b.slot_count() && b.present_[v];
        if (pa != pb) return false;
        if (pa && a.rot_[v] != b.rot_[v]) return false;
    }
    return true;
}

}  // namespace planedraw
