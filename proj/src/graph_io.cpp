#include "planedraw/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "planedraw/errors.hpp"

namespace planedraw::io {

using geom::Rat;

namespace {

struct Line {
    int number;
    std::vector<std::string> words;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string w;
        while (ls >> w) line.words.push_back(w);
        if (!line.words.empty()) out.push_back(std::move(line));
    }
    return out;
}

int parse_int(const Line& line, const std::string& w, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(w, &pos);
        if (pos != w.size()) throw std::invalid_argument(w);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line.number, std::string("bad ") + what + " '" + w + "'");
    }
}

Rat parse_coord(const Line& line, const std::string& w) {
    try {
        return geom::parse_rational(w);
    } catch (const Error& e) {
        throw ParseError(line.number, e.what());
    }
}

}  // namespace

GraphDocument parse_graph(std::istream& in) {
    const std::vector<Line> lines = tokenize(in);
    std::size_t i = 0;
    auto need = [&](const char* what) -> const Line& {
        if (i >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().number,
                                                std::string("expected ") + what);
        return lines[i];
    };

    {
        const Line& l = need("'planegraph 1' header");
        if (l.words.size() != 2 || l.words[0] != "planegraph" || l.words[1] != "1")
            throw ParseError(l.number, "expected 'planegraph 1' header");
        ++i;
    }
    int declared;
    {
        const Line& l = need("'vertices N'");
        if (l.words.size() != 2 || l.words[0] != "vertices")
            throw ParseError(l.number, "expected 'vertices N'");
        declared = parse_int(l, l.words[1], "vertex count");
        if (declared <= 0) throw ParseError(l.number, "vertex count must be positive");
        ++i;
    }

    std::map<VertexId, std::vector<VertexId>> rot;
    while (i < lines.size() && lines[i].words[0] == "rot") {
        const Line& l = lines[i];
        if (l.words.size() < 2) throw ParseError(l.number, "rot line needs a vertex id");
        std::string idw = l.words[1];
        if (!idw.empty() && idw.back() == ':') idw.pop_back();
        VertexId v = parse_int(l, idw, "vertex id");
        if (v < 0) throw ParseError(l.number, "negative vertex id");
        if (rot.count(v)) throw ParseError(l.number, "duplicate rot line for vertex " +
                                                         std::to_string(v));
        std::vector<VertexId> r;
        for (std::size_t j = 2; j < l.words.size(); ++j)
            r.push_back(parse_int(l, l.words[j], "neighbour id"));
        rot[v] = std::move(r);
        ++i;
    }
    if (static_cast<int>(rot.size()) != declared)
        throw ParseError(lines[i > 0 ? i - 1 : 0].number,
                         "vertex count " + std::to_string(declared) + " does not match " +
                             std::to_string(rot.size()) + " rot lines");

    std::optional<Dart> outer;
    if (i < lines.size() && lines[i].words[0] == "outer") {
        const Line& l = lines[i];
        if (l.words.size() != 3) throw ParseError(l.number, "expected 'outer tail head'");
        outer = Dart{parse_int(l, l.words[1], "outer tail"),
                     parse_int(l, l.words[2], "outer head")};
        ++i;
    }

    // Assemble the graph; structural problems surface as StructuralError.
    VertexId max_id = 0;
    for (const auto& [v, r] : rot) {
        max_id = std::max(max_id, v);
        for (VertexId u : r) max_id = std::max(max_id, u);
    }
    std::vector<std::vector<VertexId>> table(max_id + 1);
    std::vector<char> present(max_id + 1, 0);
    for (auto& [v, r] : rot) {
        table[v] = std::move(r);
        present[v] = 1;
    }
    GraphDocument doc{PlaneGraph::from_parts(std::move(table), std::move(present), outer),
                      std::nullopt, std::nullopt};

    if (i < lines.size() && lines[i].words[0] == "coords") {
        const Line& header = lines[i];
        if (header.words.size() < 2)
            throw ParseError(header.number, "expected 'coords exact' or 'coords float tol'");
        const std::string kind = header.words[1];
        double tol = 1e-9;
        if (kind == "float") {
            if (header.words.size() == 3) {
                try {
                    tol = std::stod(header.words[2]);
                } catch (const std::exception&) {
                    throw ParseError(header.number, "bad tolerance '" + header.words[2] + "'");
                }
            }
        } else if (kind != "exact") {
            throw ParseError(header.number, "unknown coords kind '" + kind + "'");
        }
        ++i;

        ExactDrawing exact;
        while (i < lines.size() && lines[i].words[0] == "v") {
            const Line& l = lines[i];
            if (l.words.size() != 5 || l.words[2] != "=")
                throw ParseError(l.number, "expected 'v id = x y'");
            VertexId v = parse_int(l, l.words[1], "vertex id");
            if (!doc.graph.has_vertex(v))
                throw ParseError(l.number, "coordinates for unknown vertex " +
                                               std::to_string(v));
            exact.set(v, {parse_coord(l, l.words[3]), parse_coord(l, l.words[4])});
            ++i;
        }
        for (VertexId v : doc.graph.vertices())
            if (!exact.has(v))
                throw ParseError(lines[i > 0 ? i - 1 : 0].number,
                                 "missing coordinates for vertex " + std::to_string(v));

        if (kind == "exact") {
            doc.exact_coords = std::move(exact);
        } else {
            FloatDrawing fd;
            fd.tolerance = tol;
            for (VertexId v : doc.graph.vertices()) {
                const auto& p = exact.at(v);
                fd.set(v, {p.x.get_d(), p.y.get_d()});
            }
            doc.float_coords = std::move(fd);
        }
    }

    if (i < lines.size())
        throw ParseError(lines[i].number, "unexpected line '" + lines[i].words[0] + "'");
    return doc;
}

GraphDocument parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

GraphDocument load_graph(const std::string& path) {
    if (path == "-") return parse_graph(std::cin);
    std::ifstream f(path);
    if (!f) throw ArgumentError("cannot open '" + path + "'");
    return parse_graph(f);
}

namespace {

void emit_structure(std::ostringstream& os, const PlaneGraph& g) {
    os << "planegraph 1\n";
    os << "vertices " << g.vertex_count() << "\n";
    for (VertexId v : g.vertices()) {
        os << "rot " << v << ":";
        for (VertexId u : g.rotation(v)) os << " " << u;
        os << "\n";
    }
    if (auto od = g.outer_dart()) os << "outer " << od->tail << " " << od->head << "\n";
}

}  // namespace

std::string emit_graph(const PlaneGraph& g) {
    std::ostringstream os;
    emit_structure(os, g);
    return os.str();
}

std::string emit_graph(const PlaneGraph& g, const ExactDrawing& d) {
    std::ostringstream os;
    emit_structure(os, g);
    os << "coords exact\n";
    for (VertexId v : g.vertices())
        os << "v " << v << " = " << geom::to_fraction_string(d.at(v).x) << " "
           << geom::to_fraction_string(d.at(v).y) << "\n";
    return os.str();
}

std::string emit_graph(const PlaneGraph& g, const FloatDrawing& d) {
    std::ostringstream os;
    emit_structure(os, g);
    std::ostringstream tol;
    tol.precision(17);
    tol << d.tolerance;
    os << "coords float " << tol.str() << "\n";
    for (VertexId v : g.vertices()) {
        const auto& p = d.at(v);
        os << "v " << v << " = " << geom::to_fraction_string(geom::rat_from_double(p.x))
           << " " << geom::to_fraction_string(geom::rat_from_double(p.y)) << "\n";
    }
    return os.str();
}

std::string report_json(const VerifyReport& report) {
    nlohmann::json j;
    j["passed"] = report.passed;
    j["violations"] = nlohmann::json::array();
    for (const Violation& v : report.violations) {
        nlohmann::json jv;
        jv["kind"] = Violation::kind_name(v.kind);
        switch (v.kind) {
            case Violation::Kind::crossing:
                jv["edge_a"] = v.edge_a;
                jv["edge_b"] = v.edge_b;
                jv["witness"] = {v.witness_x, v.witness_y};
                break;
            case Violation::Kind::overlap:
                jv["edge_a"] = v.edge_a;
                jv["edge_b"] = v.edge_b;
                break;
            case Violation::Kind::vertex_on_edge:
                jv["vertex"] = v.vertex_a;
                jv["edge"] = v.edge_a;
                break;
            case Violation::Kind::coincident:
                jv["vertex_a"] = v.vertex_a;
                jv["vertex_b"] = v.vertex_b;
                break;
            case Violation::Kind::rotation_mismatch:
                jv["vertex"] = v.vertex_a;
                jv["expected"] = v.expected;
                jv["realized"] = v.realized;
                break;
            case Violation::Kind::outer_face_mismatch:
                jv["expected"] = v.expected;
                jv["realized"] = v.realized;
                break;
        }
        j["violations"].push_back(std::move(jv));
    }
    return j.dump(2);
}

}  // namespace planedraw::io
