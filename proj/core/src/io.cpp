#include "ndtopo/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ndtopo/errors.hpp"

namespace ndtopo {

namespace {

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

VertexId as_vertex_id(const Json& j, const char* what) {
    if (!j.is_number_unsigned()) {
        throw parse_error(std::string(what) +
                          " must be a non-negative integer, got " + j.dump());
    }
    return j.get<VertexId>();
}

VertexSet id_array(const Json& j, const char* what) {
    if (!j.is_array()) {
        throw parse_error(std::string(what) + " must be an array");
    }
    VertexSet out;
    for (const auto& item : j) out.push_back(as_vertex_id(item, what));
    return make_vertex_set(std::move(out));
}

Graph parse_edge_list(const std::string& text) {
    VertexSet verts;
    std::vector<Edge> edges;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        auto hash = sv.find('#');
        if (hash != std::string_view::npos) sv = sv.substr(0, hash);
        std::istringstream ls{std::string(sv)};
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v)) {
            throw parse_error("line " + std::to_string(line_no) +
                              ": expected two vertex ids, got '" + line +
                              "'");
        }
        std::string extra;
        if (ls >> extra) {
            throw parse_error("line " + std::to_string(line_no) +
                              ": trailing content '" + extra + "'");
        }
        if (u < 0 || v < 0) {
            throw parse_error("line " + std::to_string(line_no) +
                              ": vertex ids must be non-negative");
        }
        if (u == v) {
            throw parse_error("line " + std::to_string(line_no) +
                              ": self-loop violates the simple-graph "
                              "constraint");
        }
        VertexId a = static_cast<VertexId>(u), b = static_cast<VertexId>(v);
        verts.push_back(a);
        verts.push_back(b);
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (edges.empty() && verts.empty()) {
        throw parse_error("edge list is empty");
    }
    return Graph::build(make_vertex_set(std::move(verts)), std::move(edges));
}

}  // namespace

Graph parse_graph(const std::string& text) {
    auto first = std::find_if(text.begin(), text.end(), [](unsigned char c) {
        return !std::isspace(c);
    });
    if (first == text.end()) throw parse_error("empty input");
    if (*first == '{') return graph_from_json(parse_json_text(text));
    return parse_edge_list(text);
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("graph JSON must be an object");
    if (!j.contains("vertices")) {
        throw parse_error("graph JSON is missing \"vertices\"");
    }
    if (!j.contains("edges")) {
        throw parse_error("graph JSON is missing \"edges\"");
    }
    VertexSet verts = id_array(j.at("vertices"), "vertex id");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw parse_error("edge must be a two-element array, got " +
                              e.dump());
        }
        VertexId u = as_vertex_id(e[0], "edge endpoint");
        VertexId v = as_vertex_id(e[1], "edge endpoint");
        if (u == v) {
            throw parse_error(
                "edge " + e.dump() +
                " is a self-loop, which violates the simple-graph "
                "constraint");
        }
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::map<VertexId, std::string> labels;
    if (j.contains("labels")) {
        const Json& lj = j.at("labels");
        if (!lj.is_object()) throw parse_error("labels must be an object");
        for (const auto& [key, value] : lj.items()) {
            VertexId v;
            try {
                std::size_t used = 0;
                unsigned long parsed = std::stoul(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
                v = static_cast<VertexId>(parsed);
            } catch (const std::exception&) {
                throw parse_error("label key '" + key +
                                  "' is not a vertex id");
            }
            if (!value.is_string()) {
                throw parse_error("label for vertex " + key +
                                  " must be a string");
            }
            labels.emplace(v, value.get<std::string>());
        }
    }
    try {
        return Graph::build(std::move(verts), std::move(edges),
                            std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.vertices();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back(Json::array({u, v}));
    }
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        Json labels = Json::object();
        for (const auto& [v, text] : g.labels()) {
            labels[std::to_string(v)] = text;
        }
        j["labels"] = std::move(labels);
    }
    return j;
}

Json trace_to_json(const ReductionTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json step;
        step["op"] = step_kind_name(s.kind);
        switch (s.kind) {
            case StepKind::delete_point:
            case StepKind::attach_point:
                step["v"] = s.v;
                step["rim"] = s.rim_vertices;
                break;
            case StepKind::delete_edge:
            case StepKind::attach_edge:
                step["u"] = s.u;
                step["v"] = s.v;
                break;
        }
        steps.push_back(std::move(step));
    }
    return Json{{"start", t.start_hash},
                {"steps", std::move(steps)},
                {"end", t.end_hash}};
}

ReductionTrace trace_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("start") || !j.contains("steps") ||
        !j.contains("end")) {
        throw parse_error("trace JSON needs start, steps, and end");
    }
    ReductionTrace t;
    t.start_hash = j.at("start").get<std::string>();
    t.end_hash = j.at("end").get<std::string>();
    for (const auto& sj : j.at("steps")) {
        StepKind kind;
        try {
            kind = step_kind_from_name(sj.at("op").get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what());
        }
        TransformationStep s;
        s.kind = kind;
        switch (kind) {
            case StepKind::delete_point:
            case StepKind::attach_point:
                s.v = as_vertex_id(sj.at("v"), "step vertex");
                if (sj.contains("rim")) {
                    s.rim_vertices = id_array(sj.at("rim"), "rim vertex");
                } else if (kind == StepKind::attach_point) {
                    throw parse_error("attach-point step needs a rim");
                }
                break;
            case StepKind::delete_edge:
            case StepKind::attach_edge: {
                VertexId u = as_vertex_id(sj.at("u"), "edge endpoint");
                VertexId v = as_vertex_id(sj.at("v"), "edge endpoint");
                s.u = std::min(u, v);
                s.v = std::max(u, v);
                break;
            }
        }
        t.steps.push_back(std::move(s));
    }
    return t;
}

Json partition_to_json(const PartitionResult& p) {
    Json j{{"A", p.a}, {"S", p.s}, {"B", p.b}};
    if (p.exterior == ExteriorSide::a) j["exterior"] = "A";
    if (p.exterior == ExteriorSide::b) j["exterior"] = "B";
    return j;
}

PartitionResult partition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("S") ||
        !j.contains("B")) {
        throw parse_error("partition JSON needs A, S, and B");
    }
    PartitionResult p;
    p.a = id_array(j.at("A"), "A member");
    p.s = id_array(j.at("S"), "S member");
    p.b = id_array(j.at("B"), "B member");
    if (j.contains("exterior")) {
        std::string e = j.at("exterior").get<std::string>();
        if (e == "A") {
            p.exterior = ExteriorSide::a;
        } else if (e == "B") {
            p.exterior = ExteriorSide::b;
        } else {
            throw parse_error("exterior must be \"A\" or \"B\"");
        }
    }
    return p;
}

Json space_class_to_json(const SpaceClass& s) {
    Json j{{"class", space_tag_name(s.tag)}};
    switch (s.tag) {
        case SpaceClass::Tag::sphere:
        case SpaceClass::Tag::manifold:
            j["dim"] = s.dim;
            break;
        case SpaceClass::Tag::disk:
            j["dim"] = s.dim;
            j["boundary"] = s.boundary;
            break;
        case SpaceClass::Tag::contractible:
            break;
        case SpaceClass::Tag::other: {
            Json w = Json::object();
            if (s.witness) {
                if (s.witness->vertex) w["vertex"] = *s.witness->vertex;
                w["failed"] = s.witness->reason;
            }
            j["witness"] = std::move(w);
            break;
        }
    }
    return j;
}

Json contractibility_to_json(const ContractibilityVerdict& v) {
    Json j{{"contractible", v.contractible}};
    if (v.contractible) {
        j["trace"] = trace_to_json(v.trace);
    } else {
        j["stuck"] = v.stuck.vertices();
    }
    return j;
}

Json window_spec_to_json(const WindowSpec& spec) {
    Json bounds = Json::array();
    for (const auto& [a, b] : spec.bounds) {
        bounds.push_back(Json::array({a, b}));
    }
    return Json{{"rule", rule_name(spec.rule)}, {"bounds", std::move(bounds)}};
}

WindowSpec window_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("bounds")) {
        throw parse_error("window spec needs \"bounds\"");
    }
    WindowSpec spec;
    if (j.contains("rule")) {
        spec.rule = rule_from_name(j.at("rule").get<std::string>());
    }
    for (const auto& bj : j.at("bounds")) {
        if (!bj.is_array() || bj.size() != 2 || !bj[0].is_number_integer() ||
            !bj[1].is_number_integer()) {
            throw parse_error("each bound must be [a,b], got " + bj.dump());
        }
        spec.bounds.emplace_back(bj[0].get<int>(), bj[1].get<int>());
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
    return spec;
}

Json homology_to_json(const HomologySummary& h) {
    std::vector<bool> torsion = h.torsion;
    return Json{{"euler", h.euler},
                {"betti", h.betti},
                {"torsion", torsion}};
}

VertexSet vertex_set_from_text(const std::string& text) {
    auto first = std::find_if(text.begin(), text.end(), [](unsigned char c) {
        return !std::isspace(c);
    });
    if (first == text.end()) throw parse_error("empty vertex set input");
    if (*first == '[') {
        return id_array(parse_json_text(text), "vertex id");
    }
    return parse_graph(text).vertices();
}

std::vector<LatticePoint> points_from_labels(const Graph& g) {
    std::vector<LatticePoint> pts;
    pts.reserve(g.vertex_count());
    for (VertexId v : g.vertices()) {
        auto it = g.labels().find(v);
        if (it == g.labels().end()) {
            throw parse_error("vertex " + std::to_string(v) +
                              " has no coordinate label");
        }
        pts.push_back(parse_point_label(it->second));
    }
    return pts;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string export_dot(const Graph& g, const PartitionResult* part,
                       const DiskDecomposition* disk) {
    std::string out = "graph G {\n  node [shape=circle];\n";
    for (VertexId v : g.vertices()) {
        out += "  v" + std::to_string(v);
        out += " [label=\"" + dot_escape(g.label_or_id(v)) + "\"";
        const char* color = nullptr;
        if (part) {
            if (set_contains(part->a, v)) color = "lightblue";
            if (set_contains(part->s, v)) color = "gold";
            if (set_contains(part->b, v)) color = "lightpink";
        } else if (disk) {
            color = set_contains(disk->boundary, v) ? "gold" : "lightblue";
        }
        if (color) {
            out += ", style=filled, fillcolor=";
            out += color;
        }
        out += "];\n";
    }
    for (const auto& [u, v] : g.edges()) {
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) +
               ";\n";
    }
    out += "}\n";
    return out;
}

std::string dump_json(const Json& j) { return j.dump() + "\n"; }

}  // namespace ndtopo
