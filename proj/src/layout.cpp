#include "planedraw/layout.hpp"

#include <algorithm>
#include <cmath>

#include "planedraw/errors.hpp"
#include "planedraw/verify.hpp"

namespace planedraw {

using geom::Pt;
using geom::Rat;
using geom::Sign;

namespace {

template <typename S>
Sign vsign(const S& v) {
    if constexpr (std::is_same_v<S, Rat>) return geom::sign_of(v);
    else return geom::sign_of(v, 0.0);
}

template <typename S>
bool is_zero_vec(const Pt<S>& v) {
    return vsign(v.x) == Sign::zero && vsign(v.y) == Sign::zero;
}

// Open clockwise sector swept from direction `from` rotating clockwise to
// direction `to`; equivalently the counterclockwise sector from `to` back to
// `from`. Assumes nonzero vectors that do not point the same way.
template <typename S>
bool in_cw_sector(const Pt<S>& from, const Pt<S>& to, const Pt<S>& t) {
    Sign span = vsign(geom::cross(to, from));
    Sign s1 = vsign(geom::cross(to, t));
    Sign s2 = vsign(geom::cross(t, from));
    if (span == Sign::positive)
        return s1 == Sign::positive && s2 == Sign::positive;
    if (span == Sign::negative)
        return s1 == Sign::positive || s2 == Sign::positive;
    return s1 == Sign::positive;  // antiparallel bounds: an open half-plane
}

// Direction candidates for the split, cheapest first. The exact kernel snaps
// to dyadic components so coordinate size grows additively per split; the
// exact direction is kept as the final fallback. The floating kernel just
// normalizes.
std::vector<Pt<Rat>> direction_candidates(const Pt<Rat>& d) {
    long e = 0;
    bool have = false;
    for (const Rat* c : {&d.x, &d.y}) {
        if (sgn(*c) != 0) {
            long le = geom::approx_log2(abs(*c));
            e = have ? std::max(e, le) : le;
            have = true;
        }
    }
    Rat scale = geom::pow2(static_cast<int>(-e));
    Pt<Rat> scaled{scale * d.x, scale * d.y};
    std::vector<Pt<Rat>> out;
    for (int bits : {16, 32, 48})
        out.push_back({geom::snap_dyadic(scaled.x, bits), geom::snap_dyadic(scaled.y, bits)});
    out.push_back(scaled);
    return out;
}

std::vector<Pt<double>> direction_candidates(const Pt<double>& d) {
    double h = std::hypot(d.x, d.y);
    return {{d.x / h, d.y / h}};
}

// Largest power of two t with t^2 * d2 <= r2 / 4, so the offset t * dir stays
// within half the closest neighbour distance.
Rat initial_scale(const Rat& d2, const Rat& r2) {
    long j0 = (geom::approx_log2(d2) - geom::approx_log2(r2)) / 2 - 2;
    long j = std::max(0L, j0);
    Rat four(4);
    while (geom::pow2(static_cast<int>(-2 * j)) * d2 * four > r2) ++j;
    while (j > 0 && geom::pow2(static_cast<int>(-2 * (j - 1))) * d2 * four <= r2) --j;
    return geom::pow2(static_cast<int>(-j));
}

double initial_scale(const double& d2, const double& r2) {
    return std::sqrt(r2 / d2) / 2.0;
}

template <typename S>
S dist2_point_segment(const Pt<S>& p, const Pt<S>& a, const Pt<S>& b) {
    const Pt<S> ab = b - a;
    const S len2 = geom::norm2(ab);
    S t = geom::dot(p - a, ab) / len2;
    if (t < S(0)) t = S(0);
    if (t > S(1)) t = S(1);
    const Pt<S> proj{a.x + t * ab.x, a.y + t * ab.y};
    return geom::norm2(p - proj);
}

// For disjoint closed segments the minimum is attained at an endpoint.
template <typename S>
S dist2_segments(const Pt<S>& a, const Pt<S>& b, const Pt<S>& c, const Pt<S>& d) {
    S m = dist2_point_segment(a, c, d);
    S x = dist2_point_segment(b, c, d);
    if (x < m) m = x;
    x = dist2_point_segment(c, a, b);
    if (x < m) m = x;
    x = dist2_point_segment(d, a, b);
    if (x < m) m = x;
    return m;
}

template <typename S>
S dist2_point_line(const Pt<S>& p, const Pt<S>& a, const Pt<S>& b) {
    const Pt<S> ab = b - a;
    const S c = geom::cross(ab, p - a);
    return (c * c) / geom::norm2(ab);
}

// Squared clearance of the star of s: the new edges sweep the epsilon-tubes
// of the old segments (s, t), and v, w stay inside the epsilon-ball at s, so
// an offset below this bound cannot create an intersection with any edge not
// incident to s, and keeps the new directions inside the angular gaps at the
// neighbours (the link-line term). This is the geometric condition behind
// the existence of a valid epsilon; the verify-and-halve loop on top of it
// only has to absorb the residual degenerate cases.
//
// The exact variant prunes with conservative double boxes before touching
// rational arithmetic; the pruning threshold is a rounded-up image of the
// current minimum, so a skipped pair can never have improved it.
Rat clearance2(const ExactDrawing& dwg, const PlaneGraph& g,
               const ContractionRecord& rec, const Pt<Rat>& s_pt, Rat best) {
    std::vector<geom::BoxPt> boxes(dwg.coords.size());
    for (std::size_t i = 0; i < dwg.coords.size(); ++i)
        if (dwg.coords[i]) boxes[i] = geom::enclose(*dwg.coords[i]);

    auto box_gap2_hi = [](const geom::BoxPt& p, const geom::BoxPt& e1,
                          const geom::BoxPt& e2) {
        double xlo = std::fmin(e1.x.lo, e2.x.lo), xhi = std::fmax(e1.x.hi, e2.x.hi);
        double ylo = std::fmin(e1.y.lo, e2.y.lo), yhi = std::fmax(e1.y.hi, e2.y.hi);
        double dx = std::fmax(0.0, std::fmax(xlo - p.x.hi, p.x.lo - xhi));
        double dy = std::fmax(0.0, std::fmax(ylo - p.y.hi, p.y.lo - yhi));
        return geom::pad_down(geom::pad_down(dx * dx) + geom::pad_down(dy * dy));
    };
    double best_hi = geom::pad_up(best.get_d());
    auto update = [&best, &best_hi](Rat cand) {
        if (cand < best) {
            best = std::move(cand);
            best_hi = geom::pad_up(best.get_d());
        }
    };

    const VertexId v = rec.v, w = rec.w;
    std::vector<std::pair<VertexId, VertexId>> other;
    for (auto e : g.edges())
        if (e.first != v && e.second != v && e.first != w && e.second != w)
            other.push_back(e);

    std::vector<VertexId> ring;  // rotation of s: p, ys, q, xs
    ring.push_back(rec.p);
    ring.insert(ring.end(), rec.ys.begin(), rec.ys.end());
    ring.push_back(rec.q);
    ring.insert(ring.end(), rec.xs.begin(), rec.xs.end());

    for (auto [a, b] : other) {
        if (box_gap2_hi(boxes[rec.s], boxes[a], boxes[b]) <= best_hi)
            update(dist2_point_segment(s_pt, dwg.at(a), dwg.at(b)));
        for (VertexId t : ring) {
            if (t == a || t == b) continue;
            const geom::BoxPt& tb = boxes[t];
            geom::BoxPt seg{{std::fmin(boxes[rec.s].x.lo, tb.x.lo),
                             std::fmax(boxes[rec.s].x.hi, tb.x.hi)},
                            {std::fmin(boxes[rec.s].y.lo, tb.y.lo),
                             std::fmax(boxes[rec.s].y.hi, tb.y.hi)}};
            if (box_gap2_hi(seg, boxes[a], boxes[b]) > best_hi) continue;
            update(dist2_segments(s_pt, dwg.at(t), dwg.at(a), dwg.at(b)));
        }
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
        VertexId a = ring[i], b = ring[(i + 1) % ring.size()];
        update(dist2_point_line(s_pt, dwg.at(a), dwg.at(b)));
    }
    return best;
}

double clearance2(const FloatDrawing& dwg, const PlaneGraph& g,
                  const ContractionRecord& rec, const Pt<double>& s_pt, double best) {
    const VertexId v = rec.v, w = rec.w;
    std::vector<VertexId> ring;
    ring.push_back(rec.p);
    ring.insert(ring.end(), rec.ys.begin(), rec.ys.end());
    ring.push_back(rec.q);
    ring.insert(ring.end(), rec.xs.begin(), rec.xs.end());

    for (auto [a, b] : g.edges()) {
        if (a == v || b == v || a == w || b == w) continue;
        best = std::min(best, dist2_point_segment(s_pt, dwg.at(a), dwg.at(b)));
        for (VertexId t : ring) {
            if (t == a || t == b) continue;
            best = std::min(best, dist2_segments(s_pt, dwg.at(t), dwg.at(a), dwg.at(b)));
        }
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
        VertexId a = ring[i], b = ring[(i + 1) % ring.size()];
        best = std::min(best, dist2_point_line(s_pt, dwg.at(a), dwg.at(b)));
    }
    return best;
}

}  // namespace

int DrawStats::max_halvings() const {
    int m = 0;
    for (int h : halvings) m = std::max(m, h);
    return m;
}

std::map<int, int> DrawStats::histogram() const {
    std::map<int, int> out;
    for (int h : halvings) ++out[h];
    return out;
}

template <typename S>
Drawing<S> draw_base(const PlaneGraph& base) {
    if (base.vertex_count() != 3 || base.edge_count() != 3)
        throw PreconditionError("base drawing requires a 3-cycle, got " +
                                std::to_string(base.vertex_count()) + " vertices and " +
                                std::to_string(base.edge_count()) + " edges");
    const Dart od = *base.outer_dart();
    VertexId third = -1;
    for (VertexId v : base.vertices())
        if (v != od.tail && v != od.head) third = v;

    // The outer orbit is tail -> head -> third; mapping tail to the origin,
    // head to the apex and third to the right makes that walk clockwise,
    // i.e. the unbounded region.
    Drawing<S> d;
    d.set(od.tail, Pt<S>{S(0), S(0)});
    d.set(od.head, Pt<S>{S(2), S(3)});
    d.set(third, Pt<S>{S(4), S(0)});
    return d;
}

template <typename S>
Line<S> separating_line(const Pt<S>& s, const Pt<S>& p, const Pt<S>& q) {
    const Pt<S> a = p - s;
    const Pt<S> b = q - s;
    if (is_zero_vec(a) || is_zero_vec(b))
        throw ArgumentError("separating line endpoints coincide with the centre");
    const S c = geom::cross(a, b);
    if (vsign(c) == Sign::zero && vsign(geom::dot(a, b)) == Sign::positive)
        throw DegeneracyError("directions to p and q are identical; the edges "
                              "sp and sq overlap");

    Pt<S> n1 = a - b;
    if (vsign(geom::dot(n1, a)) == Sign::positive &&
        vsign(geom::dot(n1, b)) == Sign::negative)
        return {s, n1};

    if (vsign(c) != Sign::zero) {
        // n . a = 1, n . b = -1 by Cramer's rule.
        Pt<S> n{(a.y + b.y) / c, -(a.x + b.x) / c};
        return {s, n};
    }
    throw KernelError("separating line construction fell through");
}

template <typename S>
Drawing<S> split_vertex(Drawing<S> drawing, const ContractionRecord& rec,
                        const PlaneGraph& g, SplitStats* stats) {
    const Pt<S> s_pt = drawing.at(rec.s);
    const Pt<S> p_pt = drawing.at(rec.p);
    const Pt<S> q_pt = drawing.at(rec.q);
    const Pt<S> a = p_pt - s_pt;
    const Pt<S> b = q_pt - s_pt;

    const Line<S> line = separating_line<S>(s_pt, p_pt, q_pt);
    const Pt<S> d0 = geom::perp(line.normal);

    // Pick the first candidate direction that still strictly separates p
    // from q (the snap may have moved it).
    Pt<S> dir{};
    bool found = false;
    for (Pt<S>& cand : direction_candidates(d0)) {
        Sign sa = vsign(geom::cross(cand, a));
        Sign sb = vsign(geom::cross(cand, b));
        if (sa != Sign::zero && sb != Sign::zero && sa != sb) {
            dir = cand;
            found = true;
            break;
        }
    }
    if (!found) throw KernelError("no separating direction candidate survived");

    // v takes the side whose arc meets the edges toward x1..xk: the clockwise
    // sector at s from direction s->q to direction s->p.
    if (!in_cw_sector(b, a, dir)) {
        dir = -dir;
        if (!in_cw_sector(b, a, dir))
            throw KernelError("separating direction lies in neither sector");
    }

    // Closest neighbour of s bounds the initial offset.
    std::vector<VertexId> nbrs{rec.p, rec.q};
    nbrs.insert(nbrs.end(), rec.xs.begin(), rec.xs.end());
    nbrs.insert(nbrs.end(), rec.ys.begin(), rec.ys.end());
    S r2{};
    bool first = true;
    for (VertexId t : nbrs) {
        S d2 = geom::norm2(drawing.at(t) - s_pt);
        if (first || d2 < r2) r2 = d2;
        first = false;
    }
    S t0 = initial_scale(geom::norm2(dir), r2);

    std::string last_conflict;
    for (int halved = 0; halved <= kMaxHalvings; ++halved) {
        const Pt<S> off{t0 * dir.x, t0 * dir.y};
        drawing.set(rec.v, s_pt + off);
        drawing.set(rec.w, s_pt - off);
        auto conflict = star_conflict(g, drawing, rec.v, rec.w);
        if (!conflict) {
            if (stats) stats->halvings = halved;
            return drawing;
        }
        last_conflict = *conflict;
        drawing.set(rec.s, s_pt);
        drawing.erase(rec.w);
        t0 /= 2;
    }
    throw KernelError("epsilon search exhausted " + std::to_string(kMaxHalvings) +
                      " halvings splitting vertex " + std::to_string(rec.s) +
                      "; last conflict: " + last_conflict);
}

template <typename S>
Drawing<S> draw(const PlaneGraph& g, Strategy strategy, DrawStats* stats,
                double tolerance) {
    constexpr bool exact = std::is_same_v<S, Rat>;

    Drawing<S> out;
    if constexpr (!exact) out.tolerance = tolerance;

    // Tiny graphs by convention.
    const std::vector<VertexId> verts = g.vertices();
    if (verts.size() == 1) {
        out.set(verts[0], Pt<S>{S(0), S(0)});
        return out;
    }
    if (verts.size() == 2) {
        out.set(verts[0], Pt<S>{S(0), S(0)});
        out.set(verts[1], Pt<S>{S(4), S(0)});
        return out;
    }

    g.require_planar();
    Augmentation aug = triangulate(g);
    ReductionSequence seq = reduce(aug.triangulated, strategy);

    Drawing<S> dwg = draw_base<S>(seq.base);
    if constexpr (!exact) dwg.tolerance = tolerance;

    PlaneGraph cur = seq.base;
    for (auto it = seq.records.rbegin(); it != seq.records.rend(); ++it) {
        cur = uncontract(cur, *it);
        SplitStats ss;
        dwg = split_vertex(std::move(dwg), *it, cur, &ss);
        if (stats) stats->halvings.push_back(ss.halvings);
#ifndef NDEBUG
        if (!verify(cur, dwg).passed)
            throw KernelError("intermediate drawing failed verification after a split");
#endif
    }
    if (!(cur == aug.triangulated))
        throw KernelError("reverse replay did not reconstruct the triangulation");

    if constexpr (exact) {
        if (!verify(aug.triangulated, dwg).passed)
            throw KernelError("final drawing failed verification under the exact "
                              "kernel");
    }
    return strip(aug, std::move(dwg));
}

template Drawing<Rat> draw_base<Rat>(const PlaneGraph&);
template Drawing<double> draw_base<double>(const PlaneGraph&);
template Line<Rat> separating_line<Rat>(const Pt<Rat>&, const Pt<Rat>&, const Pt<Rat>&);
template Line<double> separating_line<double>(const Pt<double>&, const Pt<double>&,
                                              const Pt<double>&);
template Drawing<Rat> split_vertex<Rat>(Drawing<Rat>, const ContractionRecord&,
                                        const PlaneGraph&, SplitStats*);
template Drawing<double> split_vertex<double>(Drawing<double>, const ContractionRecord&,
                                              const PlaneGraph&, SplitStats*);
template Drawing<Rat> draw<Rat>(const PlaneGraph&, Strategy, DrawStats*, double);
template Drawing<double> draw<double>(const PlaneGraph&, Strategy, DrawStats*, double);

}  // namespace planedraw
