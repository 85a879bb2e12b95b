#pragma once

#include <optional>
#include <vector>

#include "planedraw/errors.hpp"
#include "planedraw/geometry.hpp"
#include "planedraw/plane_graph.hpp"

namespace planedraw {

enum class KernelKind { exact, floating };

// Vertex -> point assignment, tagged with the arithmetic kernel that produced
// it. S is geom::Rat for the exact kernel or double for the floating one.
template <typename S>
struct Drawing {
    std::vector<std::optional<geom::Pt<S>>> coords;
    double tolerance = 0.0;  // sign-predicate band; meaningful for S = double

    static constexpr KernelKind kernel() {
        return std::is_same_v<S, geom::Rat> ? KernelKind::exact : KernelKind::floating;
    }

    bool has(VertexId v) const {
        return v >= 0 && v < static_cast<VertexId>(coords.size()) && coords[v].has_value();
    }
    const geom::Pt<S>& at(VertexId v) const {
        if (!has(v)) throw ArgumentError("vertex " + std::to_string(v) + " has no coordinates");
        return *coords[v];
    }
    void set(VertexId v, geom::Pt<S> p) {
        if (v >= static_cast<VertexId>(coords.size())) coords.resize(v + 1);
        coords[v] = std::move(p);
    }
    void erase(VertexId v) {
        if (v < static_cast<VertexId>(coords.size())) coords[v].reset();
    }
    bool covers(const PlaneGraph& g) const {
        for (VertexId v : g.vertices())
            if (!has(v)) return false;
        return true;
    }
};

using ExactDrawing = Drawing<geom::Rat>;
using FloatDrawing = Drawing<double>;

}  // namespace planedraw
