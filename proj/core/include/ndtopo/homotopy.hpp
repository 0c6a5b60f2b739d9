#ifndef NDTOPO_HOMOTOPY_HPP
#define NDTOPO_HOMOTOPY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ndtopo/graph.hpp"
#include "ndtopo/workspace.hpp"

namespace ndtopo {

enum class StepKind { delete_point, attach_point, delete_edge, attach_edge };

const char* step_kind_name(StepKind k);
StepKind step_kind_from_name(const std::string& name);

struct TransformationStep {
    StepKind kind = StepKind::delete_point;
    VertexId v = 0;          // the point; for edges the larger endpoint
    VertexId u = 0;          // smaller edge endpoint (edge steps only)
    VertexSet rim_vertices;  // delete-point: rim at deletion (inversion
                             // data); attach-point: attachment rim

    static TransformationStep delete_point(VertexId v, VertexSet rim = {});
    static TransformationStep attach_point(VertexId v, VertexSet rim);
    static TransformationStep delete_edge(VertexId u, VertexId v);
    static TransformationStep attach_edge(VertexId u, VertexId v);
};

struct ReductionTrace {
    std::string start_hash;
    std::vector<TransformationStep> steps;
    std::string end_hash;
};

struct ContractibilityVerdict {
    bool contractible = false;
    ReductionTrace trace;  // ends at a single vertex when contractible
    Graph stuck;           // >1 vertex, no simple point, when not
};

// A point is simple iff its rim is contractible; an edge iff its joint rim
// is. The empty graph is not contractible (the trivial graph is exactly
// one vertex), so empty rims are never simple.
bool is_simple_point(const Graph& g, VertexId v, Workspace& ws);
bool is_simple_edge(const Graph& g, VertexId u, VertexId v, Workspace& ws);

// Memoized greedy decision: repeatedly delete the least-id simple point.
// Complete because deleting a simple point preserves the homotopy type and
// a contractible graph with more than one point always has a simple point,
// so any maximal deletion sequence decides membership.
bool contractible(const Graph& g, Workspace& ws);

// Same decision with a replayable certificate (or a stuck witness).
ContractibilityVerdict is_contractible(const Graph& g, Workspace& ws);

// validate=true additionally requires the step to be simple at application
// time, which keeps the result homotopy-equivalent.
Graph apply_step(const Graph& g, const TransformationStep& s, bool validate,
                 Workspace& ws);

// Applies every step with validation and checks both endpoint hashes.
Graph replay(const Graph& start, const ReductionTrace& t, Workspace& ws);

// Deletion-only trace from g down to induced_subgraph(g, keep). Both g and
// the target must be contractible; greedy then never strands (a stuck run
// is reported as logic_error, never ignored).
ReductionTrace reduce_to_subgraph(const Graph& g, const VertexSet& keep,
                                  Workspace& ws);

// Seeded greedy growth of a vertex set of size <= target whose induced
// subgraph is contractible. Deterministic for a fixed seed.
VertexSet random_contractible_subspace(const Graph& g, std::size_t target,
                                       std::uint64_t seed, Workspace& ws);

}  // namespace ndtopo

#endif
