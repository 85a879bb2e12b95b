#include "planedraw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace planedraw {

using geom::Interval;
using geom::Rat;
using geom::RatPt;
using geom::Sign;

namespace {

// ---------------------------------------------------------------------------
// Predicate kernels. Both expose the same interface over vertex ids:
//  - banded signs (orient, cmp_x, cmp_y, dot_sign) used by degeneracy checks;
//  - raw signs (*_sort) used where a strict weak order is required;
//  - per-vertex double bounding boxes for cheap pair rejection.
// The exact kernel answers every query through a conservative double-interval
// filter first and falls back to rational arithmetic only when the filter
// cannot decide a sign.
// ---------------------------------------------------------------------------

class ExactKernel {
public:
    using Scalar = Rat;

    explicit ExactKernel(const ExactDrawing& d) : d_(&d) {
        boxes_.resize(d.coords.size());
        for (std::size_t i = 0; i < d.coords.size(); ++i)
            if (d.coords[i]) boxes_[i] = geom::enclose(*d.coords[i]);
    }

    const RatPt& pt(VertexId v) const { return d_->at(v); }

    Sign orient(VertexId a, VertexId b, VertexId c) const {
        Interval iv = geom::orient_interval(boxes_[a], boxes_[b], boxes_[c]);
        if (iv.sign_known()) return iv.sign();
        return geom::orient(pt(a), pt(b), pt(c));
    }
    Sign orient_sort(VertexId a, VertexId b, VertexId c) const { return orient(a, b, c); }

    Sign cmp_x(VertexId a, VertexId b) const {
        Interval iv = boxes_[a].x - boxes_[b].x;
        if (iv.sign_known()) return iv.sign();
        return geom::sign_of(Rat(pt(a).x - pt(b).x));
    }
    Sign cmp_y(VertexId a, VertexId b) const {
        Interval iv = boxes_[a].y - boxes_[b].y;
        if (iv.sign_known()) return iv.sign();
        return geom::sign_of(Rat(pt(a).y - pt(b).y));
    }
    Sign cmp_x_sort(VertexId a, VertexId b) const { return cmp_x(a, b); }
    Sign cmp_y_sort(VertexId a, VertexId b) const { return cmp_y(a, b); }

    Sign dot_sign(VertexId o, VertexId a, VertexId b) const {
        const geom::BoxPt &O = boxes_[o], &A = boxes_[a], &B = boxes_[b];
        Interval iv = (A.x - O.x) * (B.x - O.x) + (A.y - O.y) * (B.y - O.y);
        if (iv.sign_known()) return iv.sign();
        return geom::sign_of(geom::dot(pt(a) - pt(o), pt(b) - pt(o)));
    }

    double box_xlo(VertexId v) const { return boxes_[v].x.lo; }
    double box_xhi(VertexId v) const { return boxes_[v].x.hi; }
    double box_ylo(VertexId v) const { return boxes_[v].y.lo; }
    double box_yhi(VertexId v) const { return boxes_[v].y.hi; }
    double box_margin() const { return 0.0; }

    std::pair<std::string, std::string> crossing_witness(VertexId a, VertexId b,
                                                         VertexId c, VertexId d) const {
        RatPt ab = pt(b) - pt(a);
        Rat t = geom::cross(pt(c) - pt(a), pt(d) - pt(c)) /
                geom::cross(ab, pt(d) - pt(c));
        RatPt wpt = pt(a) + t * ab;
        return {geom::to_fraction_string(wpt.x), geom::to_fraction_string(wpt.y)};
    }

private:
    const ExactDrawing* d_;
    std::vector<geom::BoxPt> boxes_;
};

class FloatKernel {
public:
    using Scalar = double;

    FloatKernel(const FloatDrawing& d, double tol) : d_(&d), tol_(tol) {}

    const geom::DblPt& pt(VertexId v) const { return d_->at(v); }

    Sign orient(VertexId a, VertexId b, VertexId c) const {
        return geom::sign_of(geom::orient_value(pt(a), pt(b), pt(c)), tol_);
    }
    Sign orient_sort(VertexId a, VertexId b, VertexId c) const {
        return geom::sign_of(geom::orient_value(pt(a), pt(b), pt(c)), 0.0);
    }
    Sign cmp_x(VertexId a, VertexId b) const {
        return geom::sign_of(pt(a).x - pt(b).x, tol_);
    }
    Sign cmp_y(VertexId a, VertexId b) const {
        return geom::sign_of(pt(a).y - pt(b).y, tol_);
    }
    Sign cmp_x_sort(VertexId a, VertexId b) const {
        return geom::sign_of(pt(a).x - pt(b).x, 0.0);
    }
    Sign cmp_y_sort(VertexId a, VertexId b) const {
        return geom::sign_of(pt(a).y - pt(b).y, 0.0);
    }
    Sign dot_sign(VertexId o, VertexId a, VertexId b) const {
        return geom::sign_of(geom::dot(pt(a) - pt(o), pt(b) - pt(o)), tol_);
    }

    double box_xlo(VertexId v) const { return pt(v).x; }
    double box_xhi(VertexId v) const { return pt(v).x; }
    double box_ylo(VertexId v) const { return pt(v).y; }
    double box_yhi(VertexId v) const { return pt(v).y; }
    double box_margin() const { return tol_; }

    std::pair<std::string, std::string> crossing_witness(VertexId a, VertexId b,
                                                         VertexId c, VertexId d) const {
        geom::DblPt ab = pt(b) - pt(a);
        double t = geom::cross(pt(c) - pt(a), pt(d) - pt(c)) /
                   geom::cross(ab, pt(d) - pt(c));
        std::ostringstream x, y;
        x.precision(17);
        y.precision(17);
        x << pt(a).x + t * ab.x;
        y << pt(a).y + t * ab.y;
        return {x.str(), y.str()};
    }

private:
    const FloatDrawing* d_;
    double tol_;
};

// ---------------------------------------------------------------------------
// Generic geometric checks over a kernel.
// ---------------------------------------------------------------------------

struct EdgeBox {
    double xlo, xhi, ylo, yhi;
};

template <class K>
EdgeBox edge_box(const K& k, VertexId a, VertexId b) {
    double m = k.box_margin();
    return {std::fmin(k.box_xlo(a), k.box_xlo(b)) - m,
            std::fmax(k.box_xhi(a), k.box_xhi(b)) + m,
            std::fmin(k.box_ylo(a), k.box_ylo(b)) - m,
            std::fmax(k.box_yhi(a), k.box_yhi(b)) + m};
}

bool boxes_disjoint(const EdgeBox& a, const EdgeBox& b) {
    return a.xhi < b.xlo || b.xhi < a.xlo || a.yhi < b.ylo || b.yhi < a.ylo;
}

template <class K>
bool point_outside_box(const K& k, VertexId u, const EdgeBox& b) {
    return k.box_xhi(u) < b.xlo || k.box_xlo(u) > b.xhi || k.box_yhi(u) < b.ylo ||
           k.box_ylo(u) > b.yhi;
}

template <class K>
bool same_point(const K& k, VertexId a, VertexId b) {
    return k.cmp_x(a, b) == Sign::zero && k.cmp_y(a, b) == Sign::zero;
}

template <class K>
bool on_closed_segment(const K& k, VertexId u, VertexId s, VertexId t) {
    if (k.orient(s, t, u) != Sign::zero) return false;
    Sign xs = k.cmp_x(u, s), xt = k.cmp_x(u, t);
    if ((xs == Sign::positive && xt == Sign::positive) ||
        (xs == Sign::negative && xt == Sign::negative))
        return false;
    Sign ys = k.cmp_y(u, s), yt = k.cmp_y(u, t);
    if ((ys == Sign::positive && yt == Sign::positive) ||
        (ys == Sign::negative && yt == Sign::negative))
        return false;
    return true;
}

// Both endpoints of one segment inside the closed bounding box of the other,
// used only to finish touching classification after a zero orientation.
template <class K>
bool within_box(const K& k, VertexId u, VertexId s, VertexId t) {
    Sign xs = k.cmp_x(u, s), xt = k.cmp_x(u, t);
    if ((xs == Sign::positive && xt == Sign::positive) ||
        (xs == Sign::negative && xt == Sign::negative))
        return false;
    Sign ys = k.cmp_y(u, s), yt = k.cmp_y(u, t);
    if ((ys == Sign::positive && yt == Sign::positive) ||
        (ys == Sign::negative && yt == Sign::negative))
        return false;
    return true;
}

// Classification for segments with four pairwise-distinct endpoint ids.
template <class K>
SegmentRelation classify_independent(const K& k, VertexId a, VertexId b, VertexId c,
                                     VertexId d) {
    Sign o1 = k.orient(a, b, c);
    Sign o2 = k.orient(a, b, d);
    Sign o3 = k.orient(c, d, a);
    Sign o4 = k.orient(c, d, b);

    if (o1 != Sign::zero && o2 != Sign::zero && o3 != Sign::zero && o4 != Sign::zero) {
        if (o1 != o2 && o3 != o4) return SegmentRelation::proper_crossing;
        return SegmentRelation::disjoint;
    }

    if (o1 == Sign::zero && o2 == Sign::zero) {
        // Collinear: compare one-dimensional spans along the dominant axis.
        bool use_x = k.cmp_x(a, b) != Sign::zero;
        auto cmp = [&](VertexId u, VertexId v) { return use_x ? k.cmp_x(u, v) : k.cmp_y(u, v); };
        VertexId lo1 = a, hi1 = b, lo2 = c, hi2 = d;
        if (cmp(lo1, hi1) == Sign::positive) std::swap(lo1, hi1);
        if (cmp(lo2, hi2) == Sign::positive) std::swap(lo2, hi2);
        Sign s1 = cmp(hi1, lo2), s2 = cmp(hi2, lo1);
        if (s1 == Sign::negative || s2 == Sign::negative) return SegmentRelation::disjoint;
        if (s1 == Sign::zero || s2 == Sign::zero) return SegmentRelation::touching;
        return SegmentRelation::collinear_overlap;
    }

    if (o1 == Sign::zero && within_box(k, c, a, b)) return SegmentRelation::touching;
    if (o2 == Sign::zero && within_box(k, d, a, b)) return SegmentRelation::touching;
    if (o3 == Sign::zero && within_box(k, a, c, d)) return SegmentRelation::touching;
    if (o4 == Sign::zero && within_box(k, b, c, d)) return SegmentRelation::touching;
    return SegmentRelation::disjoint;
}

// Segments [t,u1] and [t,u2] sharing endpoint t overlap iff their far ends
// leave t in the exact same direction.
template <class K>
bool shared_endpoint_overlap(const K& k, VertexId t, VertexId u1, VertexId u2) {
    return k.orient(t, u1, u2) == Sign::zero && k.dot_sign(t, u1, u2) == Sign::positive;
}

// ---------------------------------------------------------------------------
// Angular order around a vertex (clockwise, y-up). Raw signs: sorting needs a
// strict weak order. Equal directions are ordered by id; the banded overlap
// check reports them separately.
// ---------------------------------------------------------------------------

template <class K>
int half_of(const K& k, VertexId c, VertexId a) {
    Sign sy = k.cmp_y_sort(a, c);
    if (sy == Sign::positive) return 0;
    if (sy == Sign::negative) return 1;
    return k.cmp_x_sort(a, c) == Sign::positive ? 0 : 1;
}

template <class K>
bool ccw_less(const K& k, VertexId c, VertexId a, VertexId b) {
    int ha = half_of(k, c, a), hb = half_of(k, c, b);
    if (ha != hb) return ha < hb;
    Sign s = k.orient_sort(c, a, b);
    if (s == Sign::positive) return true;
    if (s == Sign::negative) return false;
    return a < b;
}

std::vector<VertexId> rotate_min_first(std::vector<VertexId> seq) {
    if (!seq.empty()) {
        auto it = std::min_element(seq.begin(), seq.end());
        std::rotate(seq.begin(), it, seq.end());
    }
    return seq;
}

template <class K>
std::vector<VertexId> realized_rotation_impl(const K& k, const PlaneGraph& g,
                                             VertexId v) {
    std::vector<VertexId> nbrs = g.rotation(v);
    std::sort(nbrs.begin(), nbrs.end(),
              [&](VertexId a, VertexId b) { return ccw_less(k, v, a, b); });
    std::reverse(nbrs.begin(), nbrs.end());
    return rotate_min_first(std::move(nbrs));
}

// Neighbour of x that follows u in realized clockwise order around x.
template <class K>
VertexId cw_successor(const K& k, const PlaneGraph& g, VertexId x, VertexId u) {
    std::vector<VertexId> cw = realized_rotation_impl(k, g, x);
    auto it = std::find(cw.begin(), cw.end(), u);
    ++it;
    return it == cw.end() ? cw.front() : *it;
}

// ---------------------------------------------------------------------------
// The verification engine.
// ---------------------------------------------------------------------------

bool dart_less(const Dart& a, const Dart& b) {
    return a.tail < b.tail || (a.tail == b.tail && a.head < b.head);
}

std::vector<Dart> canonical_walk(std::vector<Dart> walk) {
    if (!walk.empty()) {
        auto it = std::min_element(walk.begin(), walk.end(), dart_less);
        std::rotate(walk.begin(), it, walk.end());
    }
    return walk;
}

// Traces the boundary of the geometrically unbounded region: start at the
// lowest-then-leftmost vertex (a hull vertex, so on the unbounded face), leave
// along the highest-angle neighbour, and repeatedly take the realized
// clockwise successor of the reverse direction. Faces lie to the left of
// their darts, so this keeps the unbounded region on the left.
template <class K>
std::optional<std::vector<Dart>> trace_outer_walk(const PlaneGraph& g, const K& k) {
    const auto verts = g.vertices();
    VertexId start = verts.front();
    for (VertexId v : verts) {
        Sign sy = k.cmp_y_sort(v, start);
        if (sy == Sign::negative ||
            (sy == Sign::zero && k.cmp_x_sort(v, start) == Sign::negative))
            start = v;
    }
    if (g.degree(start) == 0) return std::nullopt;

    VertexId out = g.rotation(start).front();
    for (VertexId u : g.rotation(start))
        if (ccw_less(k, start, out, u)) out = u;

    const Dart first{start, out};
    std::vector<Dart> walk{first};
    Dart cur = first;
    const int cap = 2 * g.edge_count() + 1;
    for (int step = 0; step < cap; ++step) {
        Dart next{cur.head, cw_successor(k, g, cur.head, cur.tail)};
        if (next == first) return walk;
        walk.push_back(next);
        cur = next;
    }
    return std::nullopt;
}

template <class K>
VerifyReport run_verify(const PlaneGraph& g, const K& k) {
    VerifyReport rep;
    auto add = [&rep](Violation v) {
        rep.passed = false;
        rep.violations.push_back(std::move(v));
    };

    const std::vector<VertexId> verts = g.vertices();
    const auto edges = g.edges();

    // (a) vertex points pairwise distinct.
    std::vector<char> coincident(g.slot_count(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (same_point(k, verts[i], verts[j])) {
                Violation v{};
                v.kind = Violation::Kind::coincident;
                v.vertex_a = verts[i];
                v.vertex_b = verts[j];
                add(std::move(v));
                coincident[verts[i]] = coincident[verts[j]] = 1;
            }

    // Edge boxes for pair rejection.
    std::vector<EdgeBox> eboxes;
    eboxes.reserve(edges.size());
    for (auto [s, t] : edges) eboxes.push_back(edge_box(k, s, t));

    // (b) no vertex on a non-incident edge.
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [s, t] = edges[e];
        for (VertexId u : verts) {
            if (u == s || u == t) continue;
            if (point_outside_box(k, u, eboxes[e])) continue;
            if (on_closed_segment(k, u, s, t)) {
                Violation v{};
                v.kind = Violation::Kind::vertex_on_edge;
                v.vertex_a = u;
                v.edge_a = {s, t};
                add(std::move(v));
            }
        }
    }

    // (c) independent edges must be disjoint; (d) adjacent edges must not
    // overlap. Touching cases are exactly the vertex_on_edge/coincident
    // violations already reported above.
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            VertexId shared = -1, u1 = -1, u2 = -1;
            if (a == c) shared = a, u1 = b, u2 = d;
            else if (a == d) shared = a, u1 = b, u2 = c;
            else if (b == c) shared = b, u1 = a, u2 = d;
            else if (b == d) shared = b, u1 = a, u2 = c;

            if (shared >= 0) {
                if (shared_endpoint_overlap(k, shared, u1, u2)) {
                    Violation v{};
                    v.kind = Violation::Kind::overlap;
                    v.edge_a = {a, b};
                    v.edge_b = {c, d};
                    add(std::move(v));
                }
                continue;
            }
            if (boxes_disjoint(eboxes[i], eboxes[j])) continue;
            switch (classify_independent(k, a, b, c, d)) {
                case SegmentRelation::proper_crossing: {
                    Violation v{};
                    v.kind = Violation::Kind::crossing;
                    v.edge_a = {a, b};
                    v.edge_b = {c, d};
                    std::tie(v.witness_x, v.witness_y) = k.crossing_witness(a, b, c, d);
                    add(std::move(v));
                    break;
                }
                case SegmentRelation::collinear_overlap: {
                    Violation v{};
                    v.kind = Violation::Kind::overlap;
                    v.edge_a = {a, b};
                    v.edge_b = {c, d};
                    add(std::move(v));
                    break;
                }
                default:
                    break;
            }
        }
    }

    // (e) realized clockwise order at every vertex equals the rotation
    // system. Skipped around coincident points, whose directions are
    // undefined; those vertices already carry violations.
    for (VertexId v : verts) {
        if (coincident[v]) continue;
        bool nbr_bad = false;
        for (VertexId u : g.rotation(v)) nbr_bad = nbr_bad || coincident[u];
        if (nbr_bad) continue;
        std::vector<VertexId> realized = realized_rotation_impl(k, g, v);
        if (realized != g.rotation(v)) {
            Violation viol{};
            viol.kind = Violation::Kind::rotation_mismatch;
            viol.vertex_a = v;
            viol.expected = g.rotation(v);
            viol.realized = std::move(realized);
            add(std::move(viol));
        }
    }

    // (f) the unbounded region is the nominated outer face.
    bool any_coincident = false;
    for (VertexId v : verts) any_coincident = any_coincident || coincident[v];
    if (!any_coincident && g.edge_count() > 0) {
        auto realized = trace_outer_walk(g, k);
        std::vector<Dart> expected = canonical_walk(g.face_of(*g.outer_dart()).darts);
        bool match = realized.has_value() &&
                     canonical_walk(*realized) == expected;
        if (!match) {
            Violation v{};
            v.kind = Violation::Kind::outer_face_mismatch;
            for (const Dart& d : expected) v.expected.push_back(d.tail);
            if (realized)
                for (const Dart& d : canonical_walk(*realized)) v.realized.push_back(d.tail);
            add(std::move(v));
        }
    }

    return rep;
}

template <class K>
std::optional<std::string> run_star_check(const PlaneGraph& g, const K& k, VertexId v,
                                          VertexId w) {
    const std::vector<VertexId> verts = g.vertices();

    std::vector<std::pair<VertexId, VertexId>> ne, oe;
    for (auto e : g.edges()) {
        if (e.first == v || e.second == v || e.first == w || e.second == w)
            ne.push_back(e);
        else
            oe.push_back(e);
    }

    auto estr = [](std::pair<VertexId, VertexId> e) {
        return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
    };

    // Coincidence with any other vertex.
    for (VertexId u : verts) {
        if (u != v && same_point(k, v, u))
            return "vertex " + std::to_string(v) + " coincides with " + std::to_string(u);
        if (u != w && u != v && same_point(k, w, u))
            return "vertex " + std::to_string(w) + " coincides with " + std::to_string(u);
    }

    // Vertices on the new edges; the new points on old edges.
    for (auto e : ne) {
        EdgeBox box = edge_box(k, e.first, e.second);
        for (VertexId u : verts) {
            if (u == e.first || u == e.second) continue;
            if (point_outside_box(k, u, box)) continue;
            if (on_closed_segment(k, u, e.first, e.second))
                return "vertex " + std::to_string(u) + " lies on edge " + estr(e);
        }
    }
    for (auto e : oe) {
        EdgeBox box = edge_box(k, e.first, e.second);
        for (VertexId u : {v, w}) {
            if (point_outside_box(k, u, box)) continue;
            if (on_closed_segment(k, u, e.first, e.second))
                return "vertex " + std::to_string(u) + " lies on edge " + estr(e);
        }
    }

    // New edges against old edges and against each other.
    auto check_pair = [&](std::pair<VertexId, VertexId> e,
                          std::pair<VertexId, VertexId> f) -> std::optional<std::string> {
        auto [a, b] = e;
        auto [c, d] = f;
        VertexId shared = -1, u1 = -1, u2 = -1;
        if (a == c) shared = a, u1 = b, u2 = d;
        else if (a == d) shared = a, u1 = b, u2 = c;
        else if (b == c) shared = b, u1 = a, u2 = d;
        else if (b == d) shared = b, u1 = a, u2 = c;
        if (shared >= 0) {
            if (shared_endpoint_overlap(k, shared, u1, u2))
                return "edges " + estr(e) + " and " + estr(f) + " overlap";
            return std::nullopt;
        }
        if (boxes_disjoint(edge_box(k, a, b), edge_box(k, c, d))) return std::nullopt;
        if (classify_independent(k, a, b, c, d) != SegmentRelation::disjoint)
            return "edges " + estr(e) + " and " + estr(f) + " intersect";
        return std::nullopt;
    };

    for (auto e : ne) {
        for (auto f : oe)
            if (auto c = check_pair(e, f)) return c;
    }
    for (std::size_t i = 0; i < ne.size(); ++i)
        for (std::size_t j = i + 1; j < ne.size(); ++j)
            if (auto c = check_pair(ne[i], ne[j])) return c;

    // Rotations at the two new vertices and at every neighbour of them.
    std::vector<VertexId> affected{v, w};
    for (VertexId u : g.rotation(v)) affected.push_back(u);
    for (VertexId u : g.rotation(w)) affected.push_back(u);
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
    for (VertexId t : affected) {
        if (realized_rotation_impl(k, g, t) != g.rotation(t))
            return "realized rotation at vertex " + std::to_string(t) +
                   " does not match";
    }

    return std::nullopt;
}

void require_coverage(bool covered) {
    if (!covered) throw ArgumentError("drawing is missing coordinates for some vertex");
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface.
// ---------------------------------------------------------------------------

SegmentRelation segments_intersect(const RatPt& a, const RatPt& b, const RatPt& c,
                                   const RatPt& d) {
    if (a == b || c == d) throw ArgumentError("degenerate segment");
    ExactDrawing tmp;
    tmp.set(0, a);
    tmp.set(1, b);
    tmp.set(2, c);
    tmp.set(3, d);
    return classify_independent(ExactKernel(tmp), 0, 1, 2, 3);
}

VerifyReport verify(const PlaneGraph& g, const ExactDrawing& drawing) {
    require_coverage(drawing.covers(g));
    return run_verify(g, ExactKernel(drawing));
}

VerifyReport verify(const PlaneGraph& g, const FloatDrawing& drawing) {
    require_coverage(drawing.covers(g));
    double tol = drawing.tolerance > 0 ? drawing.tolerance : 1e-9;
    return run_verify(g, FloatKernel(drawing, tol));
}

std::vector<VertexId> realized_rotation(const PlaneGraph& g, const ExactDrawing& d,
                                        VertexId v) {
    return realized_rotation_impl(ExactKernel(d), g, v);
}

std::vector<VertexId> realized_rotation(const PlaneGraph& g, const FloatDrawing& d,
                                        VertexId v) {
    double tol = d.tolerance > 0 ? d.tolerance : 1e-9;
    return realized_rotation_impl(FloatKernel(d, tol), g, v);
}

std::optional<std::string> star_conflict(const PlaneGraph& g, const ExactDrawing& d,
                                         VertexId v, VertexId w) {
    return run_star_check(g, ExactKernel(d), v, w);
}

std::optional<std::string> star_conflict(const PlaneGraph& g, const FloatDrawing& d,
                                         VertexId v, VertexId w) {
    double tol = d.tolerance > 0 ? d.tolerance : 1e-9;
    return run_star_check(g, FloatKernel(d, tol), v, w);
}

const char* Violation::kind_name(Kind k) {
    switch (k) {
        case Kind::crossing: return "crossing";
        case Kind::overlap: return "overlap";
        case Kind::vertex_on_edge: return "vertex_on_edge";
        case Kind::coincident: return "coincident";
        case Kind::rotation_mismatch: return "rotation_mismatch";
        case Kind::outer_face_mismatch: return "outer_face_mismatch";
    }
    return "?";
}

std::string Violation::describe() const {
    std::ostringstream os;
    os << kind_name(kind);
    auto edge = [&os](const std::array<VertexId, 2>& e) {
        os << " (" << e[0] << "," << e[1] << ")";
    };
    auto list = [&os](const std::vector<VertexId>& seq) {
        os << "[";
        for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? " " : "") << seq[i];
        os << "]";
    };
    switch (kind) {
        case Kind::crossing:
            edge(edge_a);
            os << " x";
            edge(edge_b);
            os << " at (" << witness_x << ", " << witness_y << ")";
            break;
        case Kind::overlap:
            edge(edge_a);
            os << " overlaps";
            edge(edge_b);
            break;
        case Kind::vertex_on_edge:
            os << " vertex " << vertex_a << " on edge";
            edge(edge_a);
            break;
        case Kind::coincident:
            os << " vertices " << vertex_a << " and " << vertex_b;
            break;
        case Kind::rotation_mismatch:
            os << " at vertex " << vertex_a << ": expected ";
            list(expected);
            os << ", realized ";
            list(realized);
            break;
        case Kind::outer_face_mismatch:
            os << ": expected walk ";
            list(expected);
            os << ", realized ";
            list(realized);
            break;
    }
    return os.str();
}

}  // namespace planedraw
