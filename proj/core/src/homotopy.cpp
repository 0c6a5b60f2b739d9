#include "ndtopo/homotopy.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

#include "ndtopo/canonical.hpp"

namespace ndtopo {

const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::delete_point: return "delete-point";
        case StepKind::attach_point: return "attach-point";
        case StepKind::delete_edge: return "delete-edge";
        case StepKind::attach_edge: return "attach-edge";
    }
    return "?";
}

StepKind step_kind_from_name(const std::string& name) {
    if (name == "delete-point") return StepKind::delete_point;
    if (name == "attach-point") return StepKind::attach_point;
    if (name == "delete-edge") return StepKind::delete_edge;
    if (name == "attach-edge") return StepKind::attach_edge;
    throw std::invalid_argument("unknown step kind '" + name + "'");
}

TransformationStep TransformationStep::delete_point(VertexId v,
                                                    VertexSet rim) {
    TransformationStep s;
    s.kind = StepKind::delete_point;
    s.v = v;
    s.rim_vertices = std::move(rim);
    return s;
}

TransformationStep TransformationStep::attach_point(VertexId v,
                                                    VertexSet rim) {
    TransformationStep s;
    s.kind = StepKind::attach_point;
    s.v = v;
    s.rim_vertices = std::move(rim);
    return s;
}

TransformationStep TransformationStep::delete_edge(VertexId u, VertexId v) {
    TransformationStep s;
    s.kind = StepKind::delete_edge;
    s.u = std::min(u, v);
    s.v = std::max(u, v);
    return s;
}

TransformationStep TransformationStep::attach_edge(VertexId u, VertexId v) {
    TransformationStep s;
    s.kind = StepKind::attach_edge;
    s.u = std::min(u, v);
    s.v = std::max(u, v);
    return s;
}

namespace {

std::size_t memo_cap(const Workspace& ws) {
    return std::min<std::size_t>(ws.limits().canonical_cap, 64);
}

struct GreedyOutcome {
    Graph graph;
    std::vector<TransformationStep> steps;
};

// Deletes least-id simple points outside `keep` until none remain. Cached
// per-vertex simplicity survives a deletion except at the deleted vertex's
// neighbors, whose rims changed.
GreedyOutcome greedy_delete_outside(const Graph& g, const VertexSet& keep,
                                    bool record, Workspace& ws) {
    GreedyOutcome out;
    Graph cur = g;
    std::map<VertexId, bool> simple_memo;
    for (;;) {
        std::optional<VertexId> pick;
        for (VertexId v : cur.vertices()) {
            if (set_contains(keep, v)) continue;
            bool simple;
            auto it = simple_memo.find(v);
            if (it != simple_memo.end()) {
                simple = it->second;
            } else {
                ws.charge();
                simple = contractible(rim(cur, v), ws);
                simple_memo.emplace(v, simple);
            }
            if (simple) {
                pick = v;
                break;
            }
        }
        if (!pick) break;
        ws.charge();
        VertexSet nbrs = cur.neighbors(*pick);
        if (record) {
            out.steps.push_back(
                TransformationStep::delete_point(*pick, nbrs));
        }
        cur = without_vertex(cur, *pick);
        simple_memo.erase(*pick);
        for (VertexId w : nbrs) simple_memo.erase(w);
    }
    out.graph = std::move(cur);
    return out;
}

}  // namespace

bool is_simple_point(const Graph& g, VertexId v, Workspace& ws) {
    return contractible(rim(g, v), ws);
}

bool is_simple_edge(const Graph& g, VertexId u, VertexId v, Workspace& ws) {
    if (!g.adjacent(u, v)) {
        throw std::invalid_argument("(" + std::to_string(u) + "," +
                                    std::to_string(v) + ") is not an edge");
    }
    return contractible(mutual_rim(g, make_vertex_set({u, v})), ws);
}

bool contractible(const Graph& g, Workspace& ws) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return false;
    if (n == 1) return true;
    if (!is_connected(g)) return false;  // deletions never merge components
    std::optional<std::string> code;
    if (n <= memo_cap(ws)) {
        code = canonical_code(g, ws.limits().canonical_cap, &ws);
        if (auto hit = ws.cached_contractible(*code)) return *hit;
    }
    GreedyOutcome out = greedy_delete_outside(g, {}, false, ws);
    bool result = out.graph.vertex_count() == 1;
    if (code) ws.remember_contractible(*code, result);
    return result;
}

ContractibilityVerdict is_contractible(const Graph& g, Workspace& ws) {
    ContractibilityVerdict verdict;
    verdict.trace.start_hash = graph_hash(g);
    GreedyOutcome out = greedy_delete_outside(g, {}, true, ws);
    verdict.contractible = out.graph.vertex_count() == 1;
    if (g.vertex_count() >= 2 && g.vertex_count() <= memo_cap(ws)) {
        ws.remember_contractible(canonical_code(g, ws.limits().canonical_cap, &ws),
                                 verdict.contractible);
    }
    if (verdict.contractible) {
        verdict.trace.steps = std::move(out.steps);
        verdict.trace.end_hash = graph_hash(out.graph);
    } else {
        verdict.trace = ReductionTrace{};
        verdict.stuck = std::move(out.graph);
    }
    return verdict;
}

Graph apply_step(const Graph& g, const TransformationStep& s, bool validate,
                 Workspace& ws) {
    switch (s.kind) {
        case StepKind::delete_point: {
            if (validate) {
                if (!s.rim_vertices.empty() &&
                    s.rim_vertices != g.neighbors(s.v)) {
                    throw std::invalid_argument(
                        "recorded rim of vertex " + std::to_string(s.v) +
                        " does not match the graph");
                }
                if (!is_simple_point(g, s.v, ws)) {
                    throw std::invalid_argument(
                        "vertex " + std::to_string(s.v) + " is not simple");
                }
            }
            return without_vertex(g, s.v);
        }
        case StepKind::attach_point: {
            if (validate &&
                !contractible(induced_subgraph(g, s.rim_vertices), ws)) {
                throw std::invalid_argument(
                    "attachment rim of vertex " + std::to_string(s.v) +
                    " is not contractible");
            }
            return with_vertex(g, s.v, s.rim_vertices);
        }
        case StepKind::delete_edge: {
            if (validate && !is_simple_edge(g, s.u, s.v, ws)) {
                throw std::invalid_argument(
                    "edge (" + std::to_string(s.u) + "," +
                    std::to_string(s.v) + ") is not simple");
            }
            return without_edge(g, s.u, s.v);
        }
        case StepKind::attach_edge: {
            if (!g.has_vertex(s.u) || !g.has_vertex(s.v)) {
                throw std::invalid_argument("attach-edge endpoint missing");
            }
            if (g.adjacent(s.u, s.v)) {
                throw std::invalid_argument("edge already present");
            }
            // the joint rim is the same with or without the edge itself
            if (validate &&
                !contractible(mutual_rim(g, make_vertex_set({s.u, s.v})),
                              ws)) {
                throw std::invalid_argument(
                    "joint rim of (" + std::to_string(s.u) + "," +
                    std::to_string(s.v) + ") is not contractible");
            }
            return with_edge(g, s.u, s.v);
        }
    }
    throw std::invalid_argument("malformed step");
}

Graph replay(const Graph& start, const ReductionTrace& t, Workspace& ws) {
    if (graph_hash(start) != t.start_hash) {
        throw std::invalid_argument("trace start hash does not match graph");
    }
    Graph cur = start;
    for (const auto& s : t.steps) cur = apply_step(cur, s, true, ws);
    if (graph_hash(cur) != t.end_hash) {
        throw std::invalid_argument("trace end hash does not match result");
    }
    return cur;
}

ReductionTrace reduce_to_subgraph(const Graph& g, const VertexSet& keep,
                                  Workspace& ws) {
    for (VertexId v : keep) {
        if (!g.has_vertex(v)) {
            throw std::invalid_argument("kept vertex " + std::to_string(v) +
                                        " is not in the graph");
        }
    }
    if (!contractible(induced_subgraph(g, keep), ws)) {
        throw std::invalid_argument("target subgraph is not contractible");
    }
    if (!contractible(g, ws)) {
        throw std::invalid_argument("graph is not contractible");
    }
    GreedyOutcome out = greedy_delete_outside(g, keep, true, ws);
    if (out.graph.vertices() != keep) {
        throw std::logic_error(
            "greedy reduction stuck although both graphs are contractible");
    }
    return ReductionTrace{graph_hash(g), std::move(out.steps),
                          graph_hash(out.graph)};
}

VertexSet random_contractible_subspace(const Graph& g, std::size_t target,
                                       std::uint64_t seed, Workspace& ws) {
    if (g.empty()) {
        throw std::invalid_argument("cannot sample from an empty graph");
    }
    std::mt19937_64 rng(seed);
    auto draw = [&rng](std::size_t n) {
        return static_cast<std::size_t>(rng() % n);
    };
    const VertexSet& verts = g.vertices();
    VertexSet chosen{verts[draw(verts.size())]};
    while (chosen.size() < target) {
        VertexSet frontier;
        for (VertexId v : chosen) {
            frontier = set_union(frontier, g.neighbors(v));
        }
        frontier = set_difference(frontier, chosen);
        bool grown = false;
        while (!frontier.empty()) {
            std::size_t i = draw(frontier.size());
            VertexSet trial = set_union(chosen, VertexSet{frontier[i]});
            if (contractible(induced_subgraph(g, trial), ws)) {
                chosen = std::move(trial);
                grown = true;
                break;
            }
            frontier.erase(frontier.begin() +
                           static_cast<std::ptrdiff_t>(i));
        }
        if (!grown) break;
    }
    return chosen;
}

}  // namespace ndtopo
