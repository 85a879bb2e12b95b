#include "planedraw/svg.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace planedraw::io {

namespace {

std::string fmt(double v) {
    char buf[48];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    return std::string(buf, ptr);
}

struct Projected {
    std::vector<std::pair<VertexId, geom::DblPt>> pts;
};

template <typename S>
Projected project(const PlaneGraph& g, const Drawing<S>& d, const SvgOptions& o) {
    Projected out;
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (VertexId v : g.vertices()) {
        double x, y;
        if constexpr (std::is_same_v<S, geom::Rat>) {
            x = d.at(v).x.get_d();
            y = d.at(v).y.get_d();
        } else {
            x = d.at(v).x;
            y = d.at(v).y;
        }
        out.pts.emplace_back(v, geom::DblPt{x, y});
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        } else {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    double w = std::max(xmax - xmin, 1e-12);
    double h = std::max(ymax - ymin, 1e-12);
    double s = std::min((o.width - 2 * o.margin) / w, (o.height - 2 * o.margin) / h);
    for (auto& [v, p] : out.pts) {
        p.x = o.margin + (p.x - xmin) * s;
        p.y = o.height - (o.margin + (p.y - ymin) * s);  // y flipped for screen
    }
    return out;
}

template <typename S>
std::string render(const PlaneGraph& g, const Drawing<S>& d, const SvgOptions& o,
                   const VerifyReport* report) {
    std::set<std::pair<VertexId, VertexId>> bad_edges;
    std::set<VertexId> bad_vertices;
    if (report) {
        for (const Violation& v : report->violations) {
            auto mark_edge = [&bad_edges](const std::array<VertexId, 2>& e) {
                if (e[0] >= 0)
                    bad_edges.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
            };
            mark_edge(v.edge_a);
            mark_edge(v.edge_b);
            if (v.vertex_a >= 0) bad_vertices.insert(v.vertex_a);
            if (v.vertex_b >= 0) bad_vertices.insert(v.vertex_b);
        }
    }

    Projected proj = project(g, d, o);
    auto at = [&proj](VertexId v) {
        for (const auto& [u, p] : proj.pts)
            if (u == v) return p;
        return geom::DblPt{0, 0};
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(o.width)
       << "\" height=\"" << fmt(o.height) << "\" viewBox=\"0 0 " << fmt(o.width) << " "
       << fmt(o.height) << "\">\n";
    os << "  <style>\n"
          "    .edge { stroke: #334; stroke-width: 1.5; }\n"
          "    .edge.bad { stroke: #c22; stroke-width: 2.5; }\n"
          "    .vertex { fill: #26a; }\n"
          "    .vertex.bad { fill: #c22; }\n"
          "    .label { font: 11px sans-serif; fill: #222; }\n"
          "  </style>\n";

    for (auto [a, b] : g.edges()) {
        geom::DblPt pa = at(a), pb = at(b);
        bool bad = bad_edges.count({a, b}) != 0;
        os << "  <line class=\"edge" << (bad ? " bad" : "") << "\" x1=\"" << fmt(pa.x)
           << "\" y1=\"" << fmt(pa.y) << "\" x2=\"" << fmt(pb.x) << "\" y2=\""
           << fmt(pb.y) << "\"/>\n";
    }
    for (const auto& [v, p] : proj.pts) {
        bool bad = bad_vertices.count(v) != 0;
        os << "  <circle class=\"vertex" << (bad ? " bad" : "") << "\" cx=\"" << fmt(p.x)
           << "\" cy=\"" << fmt(p.y) << "\" r=\"" << fmt(o.vertex_radius) << "\"/>\n";
        if (o.labels)
            os << "  <text class=\"label\" x=\"" << fmt(p.x + o.vertex_radius + 2)
               << "\" y=\"" << fmt(p.y - o.vertex_radius - 2) << "\">" << v << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string emit_svg(const PlaneGraph& g, const ExactDrawing& d, const SvgOptions& o,
                     const VerifyReport* report) {
    return render(g, d, o, report);
}

std::string emit_svg(const PlaneGraph& g, const FloatDrawing& d, const SvgOptions& o,
                     const VerifyReport* report) {
    return render(g, d, o, report);
}

}  // namespace planedraw::io
