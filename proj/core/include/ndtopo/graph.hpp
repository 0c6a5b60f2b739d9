#ifndef NDTOPO_GRAPH_HPP
#define NDTOPO_GRAPH_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ndtopo {

using VertexId = std::uint32_t;

// Vertex sets are kept sorted ascending and duplicate-free throughout.
using VertexSet = std::vector<VertexId>;

// Normalized edge, u < v.
using Edge = std::pair<VertexId, VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> ids);
bool set_contains(const VertexSet& s, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Immutable simple undirected graph value. Copies share storage; every
/// transformation below returns a new graph. Vertex ids are arbitrary
/// non-negative integers and survive subgraph operations uncompacted.
class Graph {
public:
    Graph();

    // Edges may arrive in any order; duplicates merge. Self-loops and
    // edges with endpoints outside the vertex set throw invalid_argument.
    static Graph build(VertexSet vertices, std::vector<Edge> edges,
                       std::map<VertexId, std::string> labels = {});

    std::size_t vertex_count() const;
    std::size_t edge_count() const;
    bool empty() const { return vertex_count() == 0; }

    const VertexSet& vertices() const;
    bool has_vertex(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;

    // Sorted ascending; throws invalid_argument on unknown vertex.
    const VertexSet& neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const;

    // All edges, normalized u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    const std::map<VertexId, std::string>& labels() const;
    std::string label_or_id(VertexId v) const;
    Graph with_labels(std::map<VertexId, std::string> labels) const;

    // Same ids, edges, and labels (not isomorphism).
    bool identical(const Graph& other) const;

    struct Data;  // defined in graph.cpp

private:
    explicit Graph(std::shared_ptr<const Data> d);
    std::shared_ptr<const Data> d_;
};

// ---- structural operations ----

// Subgraph induced by s; s must be a subset of g's vertices.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// O(v): induced subgraph on the neighbors of v, excluding v.
Graph rim(const Graph& g, VertexId v);

// U(v) = v together with its rim.
Graph ball(const Graph& g, VertexId v);

// O(H): induced subgraph on vertices adjacent to every member of h.
// h must be nonempty; for an edge {u,v} this is the joint rim O(uv).
Graph mutual_rim(const Graph& g, const VertexSet& h);

// G (+) H: disjoint union plus all cross edges. h's ids are shifted past
// g's maximum id; labels travel with the shift.
Graph join(const Graph& g, const Graph& h);

// Maximal connected vertex sets, ordered by least member id.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Collapse each class to its least member; adjacency is the union of the
// class members' adjacencies with self-loops dropped. Classes must be
// pairwise disjoint subsets of g's vertices.
Graph quotient_identify(const Graph& g, const std::vector<VertexSet>& classes);

// Single-step edits used by contractible transformations.
Graph without_vertex(const Graph& g, VertexId v);
Graph with_vertex(const Graph& g, VertexId v, const VertexSet& neighbors);
Graph without_edge(const Graph& g, VertexId u, VertexId v);
Graph with_edge(const Graph& g, VertexId u, VertexId v);

// Injective relabeling (used by tests and join internals).
Graph relabel(const Graph& g, const std::map<VertexId, VertexId>& mapping);

// Deterministic structural hash over ids and edges: 64-bit FNV-1a of the
// serialization "V:a,b,...;E:u-v,..." (vertices ascending, edges sorted),
// hex-encoded. Identity-sensitive, not isomorphism-invariant.
std::string graph_hash(const Graph& g);

}  // namespace ndtopo

#endif
