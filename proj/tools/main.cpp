#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "planedraw/errors.hpp"
#include "planedraw/generate.hpp"
#include "planedraw/graph_io.hpp"
#include "planedraw/layout.hpp"
#include "planedraw/plane_graph.hpp"
#include "planedraw/reduce.hpp"
#include "planedraw/svg.hpp"
#include "planedraw/verify.hpp"

namespace {

using namespace planedraw;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitError = 2;

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ArgumentError("cannot write '" + path + "'");
    f << content;
}

void print_report(const VerifyReport& report, bool json) {
    if (json) {
        std::cout << io::report_json(report) << "\n";
        return;
    }
    if (report.passed) {
        std::cout << "pass\n";
    } else {
        std::cout << "fail: " << report.violations.size() << " violation(s)\n";
        for (const Violation& v : report.violations)
            std::cout << "  " << v.describe() << "\n";
    }
}

Strategy parse_strategy(const std::string& s) {
    if (s == "main") return Strategy::main;
    if (s == "footnote") return Strategy::footnote;
    throw ArgumentError("unknown strategy '" + s + "'");
}

int cmd_gen(const GeneratorSpec& spec, const std::string& out) {
    write_output(out, io::emit_graph(gen(spec)));
    return kExitPass;
}

int cmd_draw(const std::string& in, const std::string& out, const std::string& svg_path,
             const std::string& strategy, const std::string& kernel, double tolerance,
             std::optional<std::uint64_t> /*seed*/, bool unverified, bool json) {
    io::GraphDocument doc = io::load_graph(in);
    const Strategy strat = parse_strategy(strategy);

    VerifyReport report;
    std::string emitted, svg;
    DrawStats stats;
    if (kernel == "exact") {
        ExactDrawing d = draw<geom::Rat>(doc.graph, strat, &stats);
        report = verify(doc.graph, d);
        emitted = io::emit_graph(doc.graph, d);
        if (!svg_path.empty()) svg = io::emit_svg(doc.graph, d, {}, report.passed ? nullptr : &report);
    } else if (kernel == "float") {
        FloatDrawing d = draw<double>(doc.graph, strat, &stats, tolerance);
        report = verify(doc.graph, d);
        emitted = io::emit_graph(doc.graph, d);
        if (!svg_path.empty()) svg = io::emit_svg(doc.graph, d, {}, report.passed ? nullptr : &report);
    } else {
        throw ArgumentError("unknown kernel '" + kernel + "'");
    }

    if (report.passed || unverified) {
        write_output(out, emitted);
        if (!svg_path.empty()) write_output(svg_path, svg);
    }
    if (json) {
        nlohmann::json j;
        j["verified"] = report.passed;
        j["splits"] = stats.halvings.size();
        j["max_halvings"] = stats.max_halvings();
        j["report"] = nlohmann::json::parse(io::report_json(report));
        std::cerr << j.dump(2) << "\n";
    } else if (!report.passed) {
        std::cerr << "verification failed with " << report.violations.size()
                  << " violation(s)\n";
        for (const Violation& v : report.violations) std::cerr << "  " << v.describe() << "\n";
    }
    return report.passed ? kExitPass : kExitVerifyFailed;
}

int cmd_verify(const std::string& in, bool json, const std::string& kernel) {
    io::GraphDocument doc = io::load_graph(in);
    VerifyReport report;
    if (doc.exact_coords && kernel != "float") {
        report = verify(doc.graph, *doc.exact_coords);
    } else if (doc.float_coords) {
        report = verify(doc.graph, *doc.float_coords);
    } else if (doc.exact_coords) {
        // Exact file verified with the floating kernel: round the coordinates.
        FloatDrawing fd;
        fd.tolerance = 1e-9;
        for (VertexId v : doc.graph.vertices()) {
            const auto& p = doc.exact_coords->at(v);
            fd.set(v, {p.x.get_d(), p.y.get_d()});
        }
        report = verify(doc.graph, fd);
    } else {
        throw ArgumentError("input has no coordinates to verify");
    }
    print_report(report, json);
    return report.passed ? kExitPass : kExitVerifyFailed;
}

int cmd_triangulate(const std::string& in, const std::string& out, bool list_added) {
    io::GraphDocument doc = io::load_graph(in);
    Augmentation aug = triangulate(doc.graph);
    write_output(out, io::emit_graph(aug.triangulated));
    if (list_added) {
        for (auto [a, b] : aug.added_edges)
            std::cerr << "added " << a << " " << b << "\n";
    }
    return kExitPass;
}

int cmd_stats(const std::string& in, bool json) {
    io::GraphDocument doc = io::load_graph(in);
    const PlaneGraph& g = doc.graph;
    const auto faces = g.faces();
    bool planar = g.vertex_count() - g.edge_count() + static_cast<int>(faces.size()) == 2;
    bool tri = g.is_triangulation();

    nlohmann::json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["faces"] = faces.size();
    j["planar_rotation_system"] = planar;
    j["triangulation"] = tri;
    if (tri) {
        auto sts = separating_triangles(g);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& st : sts)
            arr.push_back({{"cycle", st.cycle}, {"interior_size", st.interior.size()}});
        j["separating_triangles"] = std::move(arr);
    }
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "vertices " << g.vertex_count() << "\n";
        std::cout << "edges " << g.edge_count() << "\n";
        std::cout << "faces " << faces.size() << "\n";
        std::cout << "planar_rotation_system " << (planar ? "yes" : "no") << "\n";
        std::cout << "triangulation " << (tri ? "yes" : "no") << "\n";
        if (tri) {
            auto sts = separating_triangles(g);
            std::cout << "separating_triangles " << sts.size() << "\n";
            for (const auto& st : sts)
                std::cout << "  cycle (" << st.cycle[0] << "," << st.cycle[1] << ","
                          << st.cycle[2] << ") interior " << st.interior.size() << "\n";
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"straight-line plane graph drawing with exact verification"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    std::string family;
    GeneratorSpec spec;
    std::string gen_out = "-";
    gen_cmd->add_option("family", family,
                        "triangle|k4|octahedron|cycle|star|wheel|stacked|random")
        ->required();
    gen_cmd->add_option("--n", spec.n, "vertex count (cycle, wheel, random) or leaves (star)");
    gen_cmd->add_option("--depth", spec.depth, "stacking depth (stacked)");
    gen_cmd->add_option("--seed", spec.seed, "seed (random)");
    gen_cmd->add_option("-o,--output", gen_out, "output file, '-' for stdout");

    // draw
    auto* draw_cmd = app.add_subcommand("draw", "compute a straight-line drawing");
    std::string draw_in = "-", draw_out = "-", svg_path, strategy = "main",
                kernel = "exact";
    double tolerance = 1e-9;
    std::optional<std::uint64_t> draw_seed;
    bool unverified = false, draw_json = false;
    draw_cmd->add_option("input", draw_in, "input graph file, '-' for stdin");
    draw_cmd->add_option("-o,--output", draw_out, "output file with coordinates");
    draw_cmd->add_option("--svg", svg_path, "also write an SVG rendering");
    draw_cmd->add_option("--strategy", strategy, "edge selection: main|footnote");
    draw_cmd->add_option("--kernel", kernel, "arithmetic kernel: exact|float");
    draw_cmd->add_option("--tolerance", tolerance, "floating kernel tolerance");
    draw_cmd->add_option("--seed", draw_seed, "reserved for randomized selection");
    draw_cmd->add_flag("--unverified", unverified,
                       "write outputs even if verification fails");
    draw_cmd->add_flag("--json", draw_json, "machine-readable report on stderr");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify a drawing");
    std::string verify_in = "-", verify_kernel = "auto";
    bool verify_json = false;
    verify_cmd->add_option("input", verify_in, "graph file with coordinates");
    verify_cmd->add_option("--kernel", verify_kernel, "auto|exact|float");
    verify_cmd->add_flag("--json", verify_json, "machine-readable report");

    // triangulate
    auto* tri_cmd = app.add_subcommand("triangulate", "complete to a triangulation");
    std::string tri_in = "-", tri_out = "-";
    bool list_added = false;
    tri_cmd->add_option("input", tri_in, "input graph file");
    tri_cmd->add_option("-o,--output", tri_out, "output file");
    tri_cmd->add_flag("--list-added", list_added, "list added edges on stderr");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "structural counts and census");
    std::string stats_in = "-";
    bool stats_json = false;
    stats_cmd->add_option("input", stats_in, "input graph file");
    stats_cmd->add_flag("--json", stats_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (gen_cmd->parsed()) {
            spec.family = family;
            return cmd_gen(spec, gen_out);
        }
        if (draw_cmd->parsed())
            return cmd_draw(draw_in, draw_out, svg_path, strategy, kernel, tolerance,
                            draw_seed, unverified, draw_json);
        if (verify_cmd->parsed()) return cmd_verify(verify_in, verify_json, verify_kernel);
        if (tri_cmd->parsed()) return cmd_triangulate(tri_in, tri_out, list_added);
        if (stats_cmd->parsed()) return cmd_stats(stats_in, stats_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
