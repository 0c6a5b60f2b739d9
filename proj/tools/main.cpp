// ndtopo command line: generators, recognition checks, reductions,
// partitions, the Jordan separation check, invariants, and DOT export.
//
// Exit codes: 0 accepted, 1 usage, 2 malformed input, 3 refuted check,
// 4 work budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ndtopo/canonical.hpp"
#include "ndtopo/errors.hpp"
#include "ndtopo/graph.hpp"
#include "ndtopo/homotopy.hpp"
#include "ndtopo/invariants.hpp"
#include "ndtopo/io.hpp"
#include "ndtopo/lattice.hpp"
#include "ndtopo/partition.hpp"
#include "ndtopo/recognition.hpp"
#include "ndtopo/workspace.hpp"

using namespace ndtopo;

namespace {

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return read_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open input file '" + path + "'");
    return read_stream(f);
}

Json parse_spec_arg(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw parse_error(std::string("invalid spec JSON: ") + e.what());
    }
}

int parse_int_arg(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw parse_error(std::string("argument for ") + what +
                          " must be an integer, got '" + text + "'");
    }
}

void emit(const Json& j) { std::cout << dump_json(j); }

struct Config {
    std::string input;  // graph input path, "-" or empty = stdin
    std::uint64_t seed = 0;
    Limits limits;
};

int run_gen(const Config& cfg, const std::string& kind,
            const std::string& arg) {
    Workspace ws(cfg.limits);
    if (kind == "minimal-sphere") {
        int n = parse_int_arg(arg, "minimal-sphere");
        if (n < 0) throw parse_error("sphere dimension must be >= 0");
        emit(graph_to_json(minimal_sphere(n)));
        return 0;
    }
    if (kind == "zn-window" || kind == "yn-window") {
        AdjacencyRule rule = kind == "zn-window" ? AdjacencyRule::normal
                                                 : AdjacencyRule::complete;
        Json j = parse_spec_arg(arg);
        WindowSpec spec = window_spec_from_json(j);
        if (j.contains("rule") && spec.rule != rule) {
            throw parse_error(std::string("spec rule conflicts with ") +
                              kind);
        }
        spec.rule = rule;
        emit(graph_to_json(generate_window(spec, ws).graph));
        return 0;
    }
    if (kind == "box-boundary") {
        Json j = parse_spec_arg(arg);
        WindowSpec spec = window_spec_from_json(j);
        auto pts = box_boundary_points(spec.bounds);
        emit(graph_to_json(points_graph(AdjacencyRule::normal, pts)));
        return 0;
    }
    if (kind == "torus-quotient") {
        int p = parse_int_arg(arg, "torus-quotient");
        emit(graph_to_json(torus_quotient(p, ws)));
        return 0;
    }
    throw parse_error("unknown generator '" + kind +
                      "' (expected minimal-sphere, zn-window, yn-window, "
                      "box-boundary, or torus-quotient)");
}

int run_check(const Config& cfg, const std::string& what,
              const std::string& boundary_path) {
    Workspace ws(cfg.limits);
    Graph g = parse_graph(read_input(cfg.input));
    if (what == "contractible") {
        ContractibilityVerdict v = is_contractible(g, ws);
        emit(contractibility_to_json(v));
        return v.contractible ? 0 : 3;
    }
    if (what == "sphere") {
        SpaceClass s = classify_sphere(g, ws);
        emit(space_class_to_json(s));
        return s.accepted() ? 0 : 3;
    }
    if (what == "manifold") {
        SpaceClass s = is_normal_manifold(g, ws);
        emit(space_class_to_json(s));
        return s.accepted() ? 0 : 3;
    }
    if (what == "disk") {
        SpaceClass s;
        VertexSet interior;
        if (!boundary_path.empty()) {
            VertexSet boundary =
                vertex_set_from_text(read_input(boundary_path));
            s = is_normal_disk(g, boundary, ws);
            interior = set_difference(g.vertices(), boundary);
        } else {
            DiskGuess guess = disk_boundary_heuristic(g, ws);
            s = guess.verdict;
            interior = guess.decomposition.interior;
        }
        Json j = space_class_to_json(s);
        if (s.tag == SpaceClass::Tag::disk) j["interior"] = interior;
        emit(j);
        return s.accepted() ? 0 : 3;
    }
    throw parse_error("unknown check '" + what +
                      "' (expected contractible, sphere, manifold, or disk)");
}

int run_reduce(const Config& cfg, const std::string& keep_path) {
    Workspace ws(cfg.limits);
    Graph g = parse_graph(read_input(cfg.input));
    if (!keep_path.empty()) {
        VertexSet keep = vertex_set_from_text(read_input(keep_path));
        emit(trace_to_json(reduce_to_subgraph(g, keep, ws)));
        return 0;
    }
    ContractibilityVerdict v = is_contractible(g, ws);
    if (!v.contractible) {
        emit(Json{{"contractible", false}, {"stuck", v.stuck.vertices()}});
        return 3;
    }
    emit(trace_to_json(v.trace));
    return 0;
}

int run_partition(const Config& cfg, const std::string& surface_path) {
    Workspace ws(cfg.limits);
    Graph m = parse_graph(read_input(cfg.input));
    VertexSet s = vertex_set_from_text(read_input(surface_path));
    PartitionOutcome out = partition_by_surface(m, s);
    if (!out.ok) {
        emit(Json{{"refuted", "component-count"},
                  {"components", out.component_count}});
        return 3;
    }
    emit(partition_to_json(out.partition));
    return 0;
}

int run_jordan(const Config& cfg, const std::string& surface_path, int margin,
               const std::string& window_spec) {
    Workspace ws(cfg.limits);
    std::string source = surface_path.empty() ? cfg.input : surface_path;
    Graph surface = parse_graph(read_input(source));
    std::vector<LatticePoint> pts = points_from_labels(surface);

    WindowSpec spec;
    if (!window_spec.empty()) {
        spec = window_spec_from_json(parse_spec_arg(window_spec));
        spec.rule = AdjacencyRule::normal;
    } else {
        spec = box_around(pts, margin, AdjacencyRule::normal);
    }
    LatticeWindow window = generate_window(spec, ws);

    VertexSet s;
    for (const LatticePoint& p : pts) {
        auto id = window.id_of(p);
        if (!id) {
            throw std::invalid_argument("surface point " + point_label(p) +
                                        " lies outside the window");
        }
        s.push_back(*id);
    }
    s = make_vertex_set(std::move(s));

    JordanResult r = jordan_partition(window, s, ws);
    if (!r.accepted && r.refutation == "surface-not-sphere") {
        emit(Json{{"refuted", r.refutation},
                  {"surface", space_class_to_json(r.surface_class)}});
        return 3;
    }
    if (!r.accepted && r.refutation == "component-count") {
        emit(Json{{"refuted", r.refutation},
                  {"components", r.component_count}});
        return 3;
    }
    Json j = partition_to_json(r.partition);
    j["disk"] = space_class_to_json(r.disk_verdict);
    j["window"] = window_spec_to_json(window.spec);
    emit(j);
    return r.accepted ? 0 : 3;
}

int run_invariants(const Config& cfg, bool mod2) {
    Workspace ws(cfg.limits);
    Graph g = parse_graph(read_input(cfg.input));
    HomologySummary h = betti_numbers(
        g, ws, mod2 ? Coefficients::mod2 : Coefficients::integers);
    emit(homology_to_json(h));
    return 0;
}

int run_export(const Config& cfg, bool dot, const std::string& partition_path,
               const std::string& disk_path) {
    if (!dot) throw parse_error("export needs --dot");
    Graph g = parse_graph(read_input(cfg.input));
    std::optional<PartitionResult> part;
    std::optional<DiskDecomposition> disk;
    if (!partition_path.empty()) {
        part = partition_from_json(parse_spec_arg(read_input(partition_path)));
    } else if (!disk_path.empty()) {
        Json j = parse_spec_arg(read_input(disk_path));
        if (!j.is_object() || !j.contains("boundary")) {
            throw parse_error("disk decoration needs a boundary array");
        }
        DiskDecomposition d;
        for (const auto& v : j.at("boundary")) {
            d.boundary.push_back(v.get<VertexId>());
        }
        d.boundary = make_vertex_set(std::move(d.boundary));
        d.interior = set_difference(g.vertices(), d.boundary);
        disk = std::move(d);
    }
    std::cout << export_dot(g, part ? &*part : nullptr,
                            disk ? &*disk : nullptr);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ndtopo: digital topology on graphs - contractible "
        "transformations, sphere/manifold/disk recognition, partitions, "
        "and Jordan separation on lattice windows"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("-i,--input", cfg.input,
                   "graph input file ('-' or omitted = stdin)");
    app.add_option("--seed", cfg.seed, "seed for randomized helpers");
    app.add_option("--max-steps", cfg.limits.step_budget,
                   "work budget for reductions and recognition");
    app.add_option("--max-cliques", cfg.limits.clique_budget,
                   "clique enumeration budget");
    app.add_option("--max-window-points", cfg.limits.window_cap,
                   "lattice window point cap");
    app.add_option("--canonical-cap", cfg.limits.canonical_cap,
                   "vertex cap for exact canonical labeling");
    app.add_option("--jobs", cfg.limits.jobs,
                   "worker threads for independent checks");

    auto* gen = app.add_subcommand(
        "gen",
        "generate a graph (minimal-sphere N, zn-window SPEC, yn-window "
        "SPEC, box-boundary SPEC, torus-quotient P)");
    std::string gen_kind, gen_arg;
    gen->add_option("kind", gen_kind)->required();
    gen->add_option("arg", gen_arg)->required();
    gen->fallthrough();

    auto* check = app.add_subcommand(
        "check", "classify a graph (contractible, sphere, manifold, disk)");
    std::string check_what, check_boundary;
    check->add_option("what", check_what)->required();
    check->add_option("--boundary", check_boundary,
                      "boundary vertex set for disk checks");
    check->fallthrough();

    auto* reduce =
        app.add_subcommand("reduce", "emit a contractible reduction trace");
    std::string reduce_keep;
    reduce->add_option("--keep", reduce_keep,
                       "reduce to the induced subgraph on these vertices");
    reduce->fallthrough();

    auto* partition = app.add_subcommand(
        "partition", "split a space along a separating surface");
    std::string partition_surface;
    partition->add_option("--surface", partition_surface)->required();
    partition->fallthrough();

    auto* jordan = app.add_subcommand(
        "jordan",
        "Jordan separation of a labeled (n-1)-sphere inside a lattice "
        "window");
    std::string jordan_surface, jordan_window;
    int jordan_margin = 2;
    jordan->add_option("--surface", jordan_surface,
                       "surface graph file (default: stdin)");
    jordan->add_option("--margin", jordan_margin,
                       "window margin beyond the surface bounding box");
    jordan->add_option("--window", jordan_window, "explicit window spec JSON");
    jordan->fallthrough();

    auto* invariants = app.add_subcommand(
        "invariants", "Euler characteristic and Betti numbers");
    bool inv_mod2 = false;
    invariants->add_flag("--mod2", inv_mod2, "rank over GF(2)");
    invariants->fallthrough();

    auto* exporter = app.add_subcommand("export", "render a graph");
    bool export_dot_flag = false;
    std::string export_partition, export_disk;
    exporter->add_flag("--dot", export_dot_flag, "GraphViz DOT output");
    exporter->add_option("--partition", export_partition,
                         "partition JSON used to color vertex sets");
    exporter->add_option("--disk", export_disk,
                         "disk decomposition JSON used to color the boundary");
    exporter->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (gen->parsed()) return run_gen(cfg, gen_kind, gen_arg);
        if (check->parsed()) return run_check(cfg, check_what, check_boundary);
        if (reduce->parsed()) return run_reduce(cfg, reduce_keep);
        if (partition->parsed()) return run_partition(cfg, partition_surface);
        if (jordan->parsed()) {
            return run_jordan(cfg, jordan_surface, jordan_margin,
                              jordan_window);
        }
        if (invariants->parsed()) return run_invariants(cfg, inv_mod2);
        if (exporter->parsed()) {
            return run_export(cfg, export_dot_flag, export_partition,
                              export_disk);
        }
        std::cerr << "usage error: no subcommand\n";
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return 4;
    } catch (const cap_error& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
