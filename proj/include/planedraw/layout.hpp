#pragma once

#include <map>
#include <vector>

#include "planedraw/augment.hpp"
#include "planedraw/drawing.hpp"
#include "planedraw/geometry.hpp"
#include "planedraw/plane_graph.hpp"
#include "planedraw/reduce.hpp"

namespace planedraw {

// A line through `point` with p strictly on the positive side of `normal`
// and q strictly on the negative side.
template <typename S>
struct Line {
    geom::Pt<S> point;
    geom::Pt<S> normal;
};

// Halving budget of the epsilon search. A valid epsilon always exists, and
// shrinking epsilon only shrinks the regions the new edges sweep, so under
// the exact kernel the search cannot exhaust this budget unless something is
// broken upstream.
inline constexpr int kMaxHalvings = 64;

struct SplitStats {
    int halvings = 0;
};

struct DrawStats {
    std::vector<int> halvings;  // one entry per vertex split

    int max_halvings() const;
    std::map<int, int> histogram() const;
};

// Places a 3-cycle at the fixed points (0,0), (4,0), (2,3), assigned so the
// realized clockwise rotations match and the unbounded region is the
// nominated outer face.
template <typename S>
Drawing<S> draw_base(const PlaneGraph& base);

// A line through s separating p from q. Tries the plain difference of the
// two directions first; otherwise solves n.(p-s) = 1, n.(q-s) = -1 exactly.
// Identical directions to p and q are a degeneracy of the input drawing.
template <typename S>
Line<S> separating_line(const geom::Pt<S>& s, const geom::Pt<S>& p,
                        const geom::Pt<S>& q);

// Undoes one contraction geometrically: v and w replace s at two points on
// the separating line on opposite sides of s, with v in the clockwise sector
// at s from direction s->q to direction s->p (the side whose arc meets the
// edges to x1..xk), close enough to s that the local validity check passes.
// g is the post-uncontraction graph the result must realize.
template <typename S>
Drawing<S> split_vertex(Drawing<S> drawing, const ContractionRecord& rec,
                        const PlaneGraph& g, SplitStats* stats = nullptr);

// Full pipeline: triangulate, reduce to a triangle, draw the base and expand
// every contraction in reverse. Under the exact kernel the result is verified
// before returning. Graphs with fewer than 3 vertices are placed by
// convention. `tolerance` applies to the floating kernel only.
template <typename S>
Drawing<S> draw(const PlaneGraph& g, Strategy strategy, DrawStats* stats = nullptr,
                double tolerance = 1e-9);

}  // namespace planedraw
