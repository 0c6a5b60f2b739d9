#ifndef NDTOPO_IO_HPP
#define NDTOPO_IO_HPP

#include <string>

#include "json.hpp"
#include "ndtopo/graph.hpp"
#include "ndtopo/homotopy.hpp"
#include "ndtopo/invariants.hpp"
#include "ndtopo/lattice.hpp"
#include "ndtopo/partition.hpp"
#include "ndtopo/recognition.hpp"

namespace ndtopo {

using Json = nlohmann::json;

// Auto-detects Graph JSON ('{' first) or edge-list text ("u v" per line,
// '#' comments allowed). Symmetry is enforced by construction; self-loops
// are rejected with a diagnostic naming the simple-graph constraint.
Graph parse_graph(const std::string& text);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

Json trace_to_json(const ReductionTrace& t);
ReductionTrace trace_from_json(const Json& j);

Json partition_to_json(const PartitionResult& p);
PartitionResult partition_from_json(const Json& j);

Json space_class_to_json(const SpaceClass& s);
Json contractibility_to_json(const ContractibilityVerdict& v);

Json window_spec_to_json(const WindowSpec& spec);
WindowSpec window_spec_from_json(const Json& j);

Json homology_to_json(const HomologySummary& h);

// Vertex ids from a graph file's vertex list or a bare JSON id array.
VertexSet vertex_set_from_text(const std::string& text);

// Coordinates recovered from a graph's "(x,y)" labels; every vertex must
// carry one.
std::vector<LatticePoint> points_from_labels(const Graph& g);

// DOT export with optional partition or disk coloring; ordering is stable.
std::string export_dot(const Graph& g, const PartitionResult* part = nullptr,
                       const DiskDecomposition* disk = nullptr);

// Compact single-line dump with a trailing newline; key order is sorted,
// so equal values serialize to identical bytes.
std::string dump_json(const Json& j);

}  // namespace ndtopo

#endif
